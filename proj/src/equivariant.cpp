#include "wb/equivariant.hpp"

#include <cmath>

#include "wb/numerics.hpp"

namespace wb {

Jet tension_tau_alpha(const ReducedProblem& P, const Profile& alpha, double rho0, int K) {
	if (!P.domain.contains(rho0)) throw GeometryError("rho0 outside the model interval");
	Jet a = alpha.eval(rho0, K + 2);
	return detail::tau_jet(P, a);
}

std::vector<Jet> t_sequence(const ReducedProblem& P, const Profile& alpha, double rho0, int upto,
                            int K) {
	Jet a = alpha.eval(rho0, K + upto);
	// even entries stay on the recursion chain, odd entries (squared) branch off
	std::vector<Jet> out;
	Jet Teven = detail::tau_jet(P, a);
	for (int j = 2; j <= upto; j++) {
		if (j == 2) out.push_back(Teven);
		else if (j % 2 == 0) {
			Teven = detail::t_even_step(P, a, Teven);
			out.push_back(Teven);
		} else {
			out.push_back(detail::t_odd_square(P, a, Teven));
		}
	}
	return out;
}

double lagrangian(const ReducedProblem& P, const Profile& alpha, double rho0) {
	Jet a = alpha.eval(rho0, P.r);
	return detail::lagrangian_jet(P, a).c[0];
}

double sphere_volume(int dim) {
	// surface volume of the unit sphere S^dim in R^{dim+1}
	return 2.0 * std::pow(M_PI, 0.5 * (dim + 1)) / std::tgamma(0.5 * (dim + 1));
}

double reduced_energy(const ReducedProblem& P, const Profile& alpha, double a, double b,
                      double rel_tol, bool include_vol) {
	double v = integrate_adaptive([&](double rho) { return lagrangian(P, alpha, rho); }, a, b,
	                              rel_tol);
	return include_vol ? sphere_volume(P.domain.m - 1) * v : v;
}

double el_combination(const std::function<TanJet(const TanJet&)>& L, const Jet& alpha, int r) {
	const double rho0 = alpha.base;
	const int K = alpha.order();
	if (K < 2 * r) throw OrderTooLow("EL combination needs a profile jet of order >= 2r");
	const int KL = K - r; // order of the Lagrangian jets

	auto bump = [&](int s) { // jet of (rho-rho0)^s/s!
		Jet v = jet_const(0.0, rho0, K);
		double fac = 1.0;
		for (int j = 2; j <= s; j++) fac *= j;
		v.c[s] = 1.0 / fac;
		return v;
	};

	// tangent outputs w_s = sum_{j<=s} g_j (rho-rho0)^{s-j}/(s-j)!
	std::vector<Jet> w(r + 1);
	for (int s = 0; s <= r; s++) w[s] = split_tangent(L(tangent_input(alpha, bump(s)))).tangent;

	// triangular solve for the partial-derivative jets g_i = dL/d(alpha^{(i)})
	std::vector<Jet> g(r + 1);
	for (int s = 0; s <= r; s++) {
		Jet acc = w[s];
		for (int j = 0; j < s; j++) acc = acc - fit(bump(s - j), KL) * g[j];
		g[s] = acc;
	}

	double res = g[0].c[0];
	for (int i = 1; i <= r; i++) res += (i % 2 ? -1.0 : 1.0) * total_derivative(g[i], i);
	return res;
}

ELReport el_residual(const ReducedProblem& P, const Profile& alpha, double rho0) {
	if (!P.domain.contains(rho0)) throw GeometryError("rho0 outside the model interval");
	const int K = 2 * P.r;
	Jet a = alpha.eval(rho0, K);
	const double vol_density = std::pow(P.domain.f.value(rho0), P.domain.m - 1);

	ELReport rep;
	rep.rho0 = rho0;
	rep.input_jet_order = K;

	double res_r =
	    el_combination([&](const TanJet& u) { return detail::lagrangian_r_jet(P, u); }, a, P.r) /
	    vol_density;
	rep.residual_parts.push_back({"r_term", res_r});
	rep.residual = res_r;
	if (P.flavor == Flavor::es4_energy) {
		if (P.r != 4) throw JetError("es4 flavor requires r = 4");
		double res_es =
		    el_combination([&](const TanJet& u) { return detail::lagrangian_es_jet(P, u); }, a,
		                   P.r) /
		    vol_density;
		rep.residual_parts.push_back({"es_term", res_es});
		rep.residual += res_es;
	}
	return rep;
}

double first_variation_reduced(const ReducedProblem& P, const Profile& alpha, const Profile& v,
                               double a, double b, double rel_tol) {
	auto integrand = [&](double rho) {
		Jet aj = alpha.eval(rho, P.r);
		Jet vj = v.eval(rho, P.r);
		TanJet u = tangent_input(aj, vj);
		return detail::lagrangian_jet(P, u).c[0].d;
	};
	return integrate_adaptive(integrand, a, b, rel_tol);
}

double tau4es_assembly(const ReducedProblem& P, const Profile& alpha, double rho0) {
	const int eps = SpaceFormSign::of(P.h).eps;
	if (eps == 0) throw GeometryError("assembly requires a sin or sinh target");
	const int K = 8;
	Jet a = alpha.eval(rho0, K);
	Jet rho = jet_var<double>(rho0, K);
	Jet f = P.domain.f.apply(rho);
	Jet fd = P.domain.f.apply_d(rho);
	Jet h = P.h.apply(a);
	Jet hp = P.h.apply_d(a);
	Jet ad = derivative(a);
	Jet tau = detail::tau_jet(P, a); // order 6
	const double m1 = P.domain.m - 1;

	auto LD = [&](const Jet& F) { return radial_laplacian(P.domain, P.h, a, F); };
	Jet f2 = lax::mul(f, f);

	Jet L1 = LD(tau), L2 = LD(L1), L3 = LD(L2);
	double A = L3.c[0] - eps * m1 * lax::div(lax::mul(L2, lax::mul(h, h)), f2).c[0] +
	           2.0 * eps * m1 * lax::div(lax::mul(L1, lax::mul(tau, lax::mul(h, hp))), f2).c[0];

	Jet G = lax::div(lax::mul(tau, lax::mul(lax::mul(h, h), lax::mul(ad, ad))), f2) * (-2.0 * m1);
	double C = 0.5 * (LD(G).c[0] - eps * m1 * lax::div(lax::mul(lax::mul(h, h), G), f2).c[0]);

	Jet tau2 = lax::mul(tau, tau);
	Jet b1 = lax::div(lax::mul(tau2, lax::mul(lax::mul(ad, ad), lax::mul(h, hp))), f2);
	Jet b2 = lax::div(lax::mul(fd, lax::mul(lax::mul(h, h), lax::mul(ad, tau2))),
	                  lax::mul(f, f2));
	Jet inner = lax::div(lax::mul(lax::mul(h, h), lax::mul(ad, tau2)), f2);
	double B = -m1 * (-b1.c[0] + m1 * b2.c[0] + derivative(inner).c[0]);

	return A - C - B;
}

std::pair<double, double> divergence_identity(const ReducedProblem& P, const Profile& alpha,
                                              double rho0) {
	const int K = 4;
	Jet a = alpha.eval(rho0, K);
	Jet rho = jet_var<double>(rho0, K);
	Jet f = P.domain.f.apply(rho);
	Jet h = P.h.apply(a);
	Jet hp = P.h.apply_d(a);
	Jet ad = derivative(a);
	Jet tau = detail::tau_jet(P, a);
	const double m1 = P.domain.m - 1;

	Jet Z = lax::mul(tau, ad);
	double lhs = radial_divergence(P.domain, Z).c[0];
	// <dphi, grad tau> = alpha' tau' + (m-1) tau h h' / f^2
	double pairing = lax::mul(ad, derivative(tau)).c[0] +
	                 m1 * lax::div(lax::mul(tau, lax::mul(h, hp)), lax::mul(f, f)).c[0];
	double rhs = tau.c[0] * tau.c[0] + pairing;
	return {lhs, rhs};
}

} // namespace wb
