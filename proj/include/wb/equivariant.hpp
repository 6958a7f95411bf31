#pragma once
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "geometry.hpp"
#include "jet.hpp"

// Reduced r-energy machinery for rotationally symmetric maps phi_alpha:
// M_f -> M_h, (w,rho) |-> (w, alpha(rho)).  The T-sequence recursion produces
// the one-dimensional Lagrangian density L_r = (1/2) T_r^2 f^{m-1}; the ES-4
// flavor adds the curvature correction term.  Everything is evaluated on jets
// over a generic coefficient ring so the same code yields values, variations
// and Euler-Lagrange residuals.

namespace wb {

struct Profile {
	std::function<Jet(double, int)> eval; // exact jet of alpha at (rho0, order K)
	std::string description;
};

inline Profile constant_profile(double a) {
	return {[a](double rho0, int K) { return jet_const(a, rho0, K); }, "constant"};
}

enum class Flavor { r_energy, es4_energy };

struct ReducedProblem {
	ModelManifold domain;
	WarpFunction h; // target warp
	int r = 2;
	Flavor flavor = Flavor::r_energy;
};

struct ELReport {
	double rho0 = 0.0;
	double residual = 0.0; // EL(L_r)/f^{m-1}, volume of the spherical factor excluded
	std::vector<std::pair<std::string, double>> residual_parts;
	int input_jet_order = 0;
};

namespace detail {

// tau_alpha = alpha'' + (m-1)(f'/f) alpha' - (m-1) h(alpha) h'(alpha) / f^2
template <class S>
BasicJet<S> tau_jet(const ReducedProblem& P, const BasicJet<S>& a) {
	if (a.order() < 2) throw OrderTooLow("tension needs an order >= 2 profile jet");
	int K = a.order() - 2;
	auto rho = jet_var<S>(a.base, a.order());
	auto f = P.domain.f.apply(rho);
	auto fd = P.domain.f.apply_d(rho);
	auto h = P.h.apply(a);
	auto hp = P.h.apply_d(a);
	double m1 = P.domain.m - 1;
	auto ad = derivative(a);
	return fit(derivative(ad), K) + fit(lax::mul(lax::div(fd, f), ad), K) * m1 -
	       fit(lax::div(lax::mul(h, hp), lax::mul(f, f)), K) * m1;
}

// T_{2k} = T'' + (m-1)(f'/f) T' - (m-1) (h'(alpha)^2/f^2) T
template <class S>
BasicJet<S> t_even_step(const ReducedProblem& P, const BasicJet<S>& a, const BasicJet<S>& T) {
	int K = T.order() - 2;
	auto rho = jet_var<S>(a.base, a.order());
	auto f = P.domain.f.apply(rho);
	auto fd = P.domain.f.apply_d(rho);
	auto hp = P.h.apply_d(a);
	double m1 = P.domain.m - 1;
	auto Td = derivative(T);
	return fit(derivative(Td), K) + fit(lax::mul(lax::div(fd, f), Td), K) * m1 -
	       fit(lax::div(lax::mul(lax::mul(hp, hp), T), lax::mul(f, f)), K) * m1;
}

// squared odd entry: T_{2k+1}^2 = (T')^2 + (m-1)(h'^2/f^2) T^2; the square root
// in the recursion is never differentiated, only L = (1/2) T^2 V is used
template <class S>
BasicJet<S> t_odd_square(const ReducedProblem& P, const BasicJet<S>& a, const BasicJet<S>& T) {
	int K = T.order() - 1;
	auto rho = jet_var<S>(a.base, a.order());
	auto f = P.domain.f.apply(rho);
	auto hp = P.h.apply_d(a);
	double m1 = P.domain.m - 1;
	auto Td = derivative(T);
	return fit(lax::mul(Td, Td), K) +
	       fit(lax::div(lax::mul(lax::mul(hp, hp), lax::mul(T, T)), lax::mul(f, f)), K) * m1;
}

// T_r (even r) or T_r^2 (odd r) from the profile jet; consumes r orders
template <class S>
BasicJet<S> t_top(const ReducedProblem& P, const BasicJet<S>& a, int r, bool* squared_out = nullptr) {
	auto T = tau_jet(P, a);
	bool squared = false;
	int j = 2;
	while (j < r) {
		if (r - j >= 2) {
			T = t_even_step(P, a, T);
			j += 2;
		} else {
			T = t_odd_square(P, a, T);
			j += 1;
			squared = true;
		}
	}
	if (squared_out) *squared_out = squared;
	return T;
}

// L_r = (1/2) T_r^2 f^{m-1}
template <class S>
BasicJet<S> lagrangian_r_jet(const ReducedProblem& P, const BasicJet<S>& a) {
	int K = a.order() - P.r;
	bool squared = false;
	auto T = t_top(P, a, P.r, &squared);
	auto sq = squared ? T : lax::mul(T, T);
	auto rho = jet_var<S>(a.base, a.order());
	auto V = ipow(P.domain.f.apply(rho), P.domain.m - 1);
	return fit(lax::mul(sq, V), K) * 0.5;
}

// ES-4 correction: (1/2)(m-1) alpha'^2 tau^2 h''(alpha)^2 / f^2 * f^{m-1}
template <class S>
BasicJet<S> lagrangian_es_jet(const ReducedProblem& P, const BasicJet<S>& a) {
	int K = a.order() - 4;
	auto tau = tau_jet(P, a);
	auto ad = derivative(a);
	auto rho = jet_var<S>(a.base, a.order());
	auto f = P.domain.f.apply(rho);
	auto hpp = P.h.apply_dd(a);
	double m1 = P.domain.m - 1;
	auto num = lax::mul(lax::mul(lax::mul(ad, ad), lax::mul(tau, tau)), lax::mul(hpp, hpp));
	auto V = ipow(f, P.domain.m - 1);
	return fit(lax::mul(lax::div(num, lax::mul(f, f)), V), K) * (0.5 * m1);
}

template <class S>
BasicJet<S> lagrangian_jet(const ReducedProblem& P, const BasicJet<S>& a) {
	auto L = lagrangian_r_jet(P, a);
	if (P.flavor == Flavor::es4_energy) {
		if (P.r != 4) throw JetError("es4 flavor requires r = 4");
		L = L + fit(lagrangian_es_jet(P, a), L.order());
	}
	return L;
}

} // namespace detail

Jet tension_tau_alpha(const ReducedProblem& P, const Profile& alpha, double rho0, int K);

// T_2..T_upto (odd entries stored squared), each of order >= K
std::vector<Jet> t_sequence(const ReducedProblem& P, const Profile& alpha, double rho0, int upto,
                            int K);

// pointwise Lagrangian density
double lagrangian(const ReducedProblem& P, const Profile& alpha, double rho0);

double sphere_volume(int dim); // Vol(S^dim)

double reduced_energy(const ReducedProblem& P, const Profile& alpha, double a, double b,
                      double rel_tol = 1e-10, bool include_vol = false);

// Euler-Lagrange residual of the reduced functional at rho0, computed from
// r+1 tangent evaluations seeded with the prolongation bumps
// v_s = (rho-rho0)^s/s! and a triangular solve for the partial-derivative jets
ELReport el_residual(const ReducedProblem& P, const Profile& alpha, double rho0);

// EL combination for an arbitrary Lagrangian program (used by tests); returns
// dL/du_0 + sum_i (-1)^i d^i/drho^i dL/du_i, NOT divided by the volume density
double el_combination(const std::function<TanJet(const TanJet&)>& L, const Jet& alpha, int r);

// d/dt of reduced_energy(alpha + t v) at t=0 (no volume factor), exact in the
// jet/dual arithmetic, quadrature over [a,b]
double first_variation_reduced(const ReducedProblem& P, const Profile& alpha, const Profile& v,
                               double a, double b, double rel_tol = 1e-10);

// space-form assembly of the ES-4 tension component from the printed
// L_Delta/Omega_0/d*Omega_1 blocks; equals -el_residual for the es4 flavor
double tau4es_assembly(const ReducedProblem& P, const Profile& alpha, double rho0);

// both sides of the divergence identity for Z = tau_alpha alpha' d/drho:
// div Z  vs  tau_alpha^2 + <dphi, grad tau>
std::pair<double, double> divergence_identity(const ReducedProblem& P, const Profile& alpha,
                                              double rho0);

} // namespace wb
