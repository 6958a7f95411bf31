#pragma once
#include <functional>
#include <vector>

#include "geometry.hpp"
#include "jet.hpp"
#include "numerics.hpp"

// r-energies of closed curves gamma |-> (w(gamma), alpha(gamma)) into a
// surface of revolution.  T_2 is the tension, T_{j+1} the covariant derivative
// of T_j along the curve; E_r = (1/2) oint f^2 T_{r,w}^2 + h^2 T_{r,alpha}^2.

namespace wb {

struct CurveMap {
	SurfaceOfRevolution target;
	std::function<Jet(double, int)> w, alpha; // jets at gamma0; w carries the winding
};

struct CurveField {
	std::function<Jet(double, int)> w, alpha; // 2pi-periodic section along the curve
};

// component jets of a field along the curve at one point
template <class S>
struct CurvePair {
	BasicJet<S> w, a;
};

namespace detail {

// tau_w = w'' + 2 (f'/f) w' a';  tau_a = a'' - (f f'/h^2) w'^2 + (h'/h) a'^2
template <class S>
CurvePair<S> curve_tau(const SurfaceOfRevolution& tgt, const CurvePair<S>& c) {
	int K = c.w.order() - 2;
	auto f = tgt.f.apply(c.a), fd = tgt.f.apply_d(c.a);
	auto h = tgt.h.apply(c.a), hd = tgt.h.apply_d(c.a);
	auto wd = derivative(c.w), ad = derivative(c.a);
	auto tw = fit(derivative(wd), K) +
	          fit(lax::mul(lax::div(fd, f), lax::mul(wd, ad)), K) * 2.0;
	auto ta = fit(derivative(ad), K) -
	          fit(lax::div(lax::mul(lax::mul(f, fd), lax::mul(wd, wd)), lax::mul(h, h)), K) +
	          fit(lax::mul(lax::div(hd, h), lax::mul(ad, ad)), K);
	return {tw, ta};
}

// covariant derivative along the curve applied to a (T_w, T_a) pair
template <class S>
CurvePair<S> curve_step(const SurfaceOfRevolution& tgt, const CurvePair<S>& c,
                        const CurvePair<S>& T) {
	int K = T.w.order() - 1;
	auto f = tgt.f.apply(c.a), fd = tgt.f.apply_d(c.a);
	auto h = tgt.h.apply(c.a), hd = tgt.h.apply_d(c.a);
	auto wd = derivative(c.w), ad = derivative(c.a);
	auto nw = fit(derivative(T.w), K) +
	          fit(lax::mul(lax::div(fd, f), lax::add(lax::mul(T.a, wd), lax::mul(T.w, ad))), K);
	auto na = fit(derivative(T.a), K) -
	          fit(lax::div(lax::mul(lax::mul(f, fd), lax::mul(T.w, wd)), lax::mul(h, h)), K) +
	          fit(lax::mul(lax::div(hd, h), lax::mul(T.a, ad)), K);
	return {nw, na};
}

template <class S>
CurvePair<S> curve_t_r(const SurfaceOfRevolution& tgt, const CurvePair<S>& c, int r) {
	auto T = curve_tau(tgt, c);
	for (int j = 2; j < r; j++) T = curve_step(tgt, c, T);
	return T;
}

// (1/2)(f^2 T_{r,w}^2 + h^2 T_{r,a}^2) at one point
template <class S>
S curve_energy_density(const SurfaceOfRevolution& tgt, const CurvePair<S>& c, int r) {
	auto T = curve_t_r(tgt, c, r);
	auto f = tgt.f.apply(c.a), h = tgt.h.apply(c.a);
	S fw = lax::mul(lax::mul(f, f), lax::mul(T.w, T.w)).c[0];
	S fa = lax::mul(lax::mul(h, h), lax::mul(T.a, T.a)).c[0];
	return (fw + fa) * 0.5;
}

} // namespace detail

CurvePair<double> curve_tension(const CurveMap& c, double gamma0, int K);
std::vector<CurvePair<double>> curve_t_sequence(const CurveMap& c, double gamma0, int r);

// E_r = (1/2) oint (f^2 T_{r,w}^2 + h^2 T_{r,alpha}^2) dgamma
double curve_energy(const CurveMap& c, int r, const Quadrature& q);

struct ReparamTension {
	double tau_r_coefficient = 0.0;
	bool proper = false;
	bool r_harmonic = false;
};

// geodesic reparametrized by a polynomial mu: tau_r = (-1)^{r-1} mu^{(2r)} phi'
ReparamTension geodesic_reparam_tension(const PolyReal& mu, int r);

} // namespace wb
