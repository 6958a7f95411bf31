#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "wb/curves.hpp"

using namespace wb;

namespace {

SurfaceOfRevolution round_sphere() {
	return {WarpFunction::sin(), WarpFunction::constant(1.0), 0.0, M_PI};
}

CurveMap latitude_circle(double alpha_star, double k, const SurfaceOfRevolution& tgt) {
	CurveMap c;
	c.target = tgt;
	c.w = [k](double g0, int K) {
		return K == 0 ? jet_const(k * g0, g0, 0) : fit(jet_var<double>(g0, K) * k, K);
	};
	c.alpha = [alpha_star](double g0, int K) { return jet_const(alpha_star, g0, K); };
	return c;
}

} // namespace

TEST_CASE("the equator is a geodesic") {
	auto c = latitude_circle(M_PI / 2, 1.0, round_sphere());
	auto tau = curve_tension(c, 0.7, 2);
	CHECK(std::abs(tau.w.c[0]) < 1e-14);
	CHECK(std::abs(tau.a.c[0]) < 1e-14);
}

TEST_CASE("latitude circle tension matches the hand formula") {
	// w = k gamma, alpha const: tau_w = 0, tau_a = -sin cos k^2
	double as = 0.8, k = 2.0;
	auto c = latitude_circle(as, k, round_sphere());
	auto tau = curve_tension(c, 1.1, 2);
	CHECK(tau.w.c[0] == doctest::Approx(0.0).epsilon(1e-14));
	CHECK(tau.a.c[0] == doctest::Approx(-std::sin(as) * std::cos(as) * k * k).epsilon(1e-13));
}

TEST_CASE("t-sequence on a latitude circle stays constant in gamma") {
	double as = 0.6, k = 1.0;
	auto c = latitude_circle(as, k, round_sphere());
	auto seq = curve_t_sequence(c, 0.3, 4);
	REQUIRE(seq.size() == 3); // T_2, T_3, T_4
	for (const auto& T : seq) {
		// constant coefficients: first derivative coefficient vanishes
		if (T.w.order() >= 1) CHECK(std::abs(T.w.c[1]) < 1e-12);
		if (T.a.order() >= 1) CHECK(std::abs(T.a.c[1]) < 1e-12);
	}
	// alternating pattern: covariant steps swap the w and alpha slots
	CHECK(std::abs(seq[0].w.c[0]) < 1e-13); // tau in the alpha slot
	CHECK(std::abs(seq[1].a.c[0]) < 1e-13); // first step moves to the w slot
	CHECK(std::abs(seq[2].w.c[0]) < 1e-13);
}

TEST_CASE("r-energies of latitude circles in closed form") {
	// T_2 = (0, -sc k^2); step: T_{j+1,w} = (f'/f) T_{j,a} w', T_{j+1,a} = -(f f'/h^2) T_{j,w} w'
	// on the round sphere all energies reduce to powers of (k^2 c) times sc k^2
	double as = std::asin(1.0 / std::sqrt(3.0));
	double s = std::sin(as), c0 = std::cos(as), k = 2.0;
	auto c = latitude_circle(as, k, round_sphere());

	double t2a = -s * c0 * k * k;
	Quadrature q{QuadKind::periodic_trapezoid, 32};
	double e2 = curve_energy(c, 2, q);
	CHECK(e2 == doctest::Approx(0.5 * (1.0 * t2a * t2a) * 2.0 * M_PI).epsilon(1e-12));

	// T_3 = ((c/s) t2a k, 0); E_3 = pi f^2 T_{3,w}^2
	double t3w = (c0 / s) * t2a * k;
	double e3 = curve_energy(c, 3, q);
	CHECK(e3 == doctest::Approx(M_PI * s * s * t3w * t3w).epsilon(1e-12));

	// T_4 = (0, -s c T_{3,w} k); E_4 = pi T_{4,a}^2
	double t4a = -s * c0 * t3w * k;
	double e4 = curve_energy(c, 4, q);
	CHECK(e4 == doctest::Approx(M_PI * t4a * t4a).epsilon(1e-12));
}

TEST_CASE("winding scales the curve energies") {
	double as = 0.5;
	auto c1 = latitude_circle(as, 1.0, round_sphere());
	auto c2 = latitude_circle(as, 2.0, round_sphere());
	Quadrature q{QuadKind::periodic_trapezoid, 32};
	// tau scales as k^2, so E_2 scales as k^4
	CHECK(curve_energy(c2, 2, q) ==
	      doctest::Approx(16.0 * curve_energy(c1, 2, q)).epsilon(1e-12));
}

TEST_CASE("polynomially reparametrized geodesics") {
	// mu(s) = s^4, r = 2: tau_2 coefficient is -mu'''' = -24
	PolyReal quartic{{0.0, 0.0, 0.0, 0.0, 1.0}};
	auto rt = geodesic_reparam_tension(quartic, 2);
	CHECK(rt.tau_r_coefficient == doctest::Approx(-24.0));
	CHECK(!rt.r_harmonic);

	// same mu at r = 3: degree 4 <= 2r-1 = 5, proper 3-harmonic
	auto rt3 = geodesic_reparam_tension(quartic, 3);
	CHECK(rt3.tau_r_coefficient == doctest::Approx(0.0));
	CHECK(rt3.r_harmonic);
	CHECK(rt3.proper);

	// affine mu: geodesic itself, r-harmonic but not proper
	PolyReal affine{{1.0, 2.0}};
	auto ra = geodesic_reparam_tension(affine, 2);
	CHECK(ra.r_harmonic);
	CHECK(!ra.proper);

	// mu = s^{2r} has constant nonzero top derivative: (-1)^{r-1} (2r)!
	PolyReal s6{{0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0}};
	auto r3 = geodesic_reparam_tension(s6, 3);
	CHECK(r3.tau_r_coefficient == doctest::Approx(720.0));
	CHECK(!r3.r_harmonic);
}

TEST_CASE("curve machinery on the paraboloid") {
	SurfaceOfRevolution par{WarpFunction::identity(), WarpFunction::sqrt_one_plus_4sq(), 0.0,
	                        1e9};
	// parallel alpha* = 1/(2 sqrt(r-2)) is a critical circle of E_r; here just
	// check the tension formula: tau_a = -f f'/h^2 = -alpha/(1+4 alpha^2)
	double as = 0.5;
	auto c = latitude_circle(as, 1.0, par);
	auto tau = curve_tension(c, 0.2, 2);
	CHECK(tau.a.c[0] == doctest::Approx(-as / (1.0 + 4.0 * as * as)).epsilon(1e-13));
	CHECK(std::abs(tau.w.c[0]) < 1e-14);
}
