#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "wb/geometry.hpp"

using namespace wb;

static double fd_derivative(const WarpFunction& w, double x, int n) {
	// central differences of the pointwise value, order n in {1,2}
	double h = 1e-5;
	if (n == 1) return (w.value(x + h) - w.value(x - h)) / (2 * h);
	return (w.value(x + h) - 2 * w.value(x) + w.value(x - h)) / (h * h);
}

TEST_CASE("warp jets agree with finite differences") {
	std::vector<WarpFunction> warps = {WarpFunction::identity(), WarpFunction::sin(),
	                                   WarpFunction::sinh(), WarpFunction::cosh(),
	                                   WarpFunction::constant(2.5),
	                                   WarpFunction::sqrt_one_plus_4sq()};
	for (const auto& w : warps) {
		for (double x0 : {0.4, 1.1}) {
			Jet j = w.eval(x0, 4);
			CHECK(j.c[0] == doctest::Approx(w.value(x0)).epsilon(1e-12));
			CHECK(j.c[1] == doctest::Approx(fd_derivative(w, x0, 1)).epsilon(1e-6));
			CHECK(2.0 * j.c[2] == doctest::Approx(fd_derivative(w, x0, 2)).epsilon(1e-4));
		}
	}
}

TEST_CASE("apply_d and apply_dd are consistent with apply") {
	auto x = jet_var<double>(0.8, 6);
	for (const auto& w : {WarpFunction::sin(), WarpFunction::sqrt_one_plus_4sq(),
	                      WarpFunction::cosh()}) {
		Jet v = w.apply(x);
		Jet d = fit(w.apply_d(x), 5);
		Jet dv = derivative(v); // chain rule with x' = 1
		for (int i = 0; i <= 5; i++) CHECK(dv.c[i] == doctest::Approx(d.c[i]).epsilon(1e-11));
		Jet dd = fit(w.apply_dd(x), 4);
		Jet dv2 = derivative(fit(w.apply_d(x), 5));
		for (int i = 0; i <= 4; i++) CHECK(dv2.c[i] == doctest::Approx(dd.c[i]).epsilon(1e-10));
	}
}

TEST_CASE("warp composition with a non-trivial inner jet") {
	// h(alpha(rho)) with alpha = rho^2: check the chain rule lead terms
	auto rho = jet_var<double>(0.6, 4);
	Jet alpha = rho * rho;
	Jet h = WarpFunction::sin().apply(alpha);
	CHECK(h.c[0] == doctest::Approx(std::sin(0.36)).epsilon(1e-13));
	CHECK(h.c[1] == doctest::Approx(std::cos(0.36) * 1.2).epsilon(1e-12));
}

TEST_CASE("custom warps compose through exact jets and refuse duals") {
	auto w = WarpFunction::custom(
	    [](double x0, int K) { return exp(jet_var<double>(x0, std::max(K, 1))); });
	auto x = jet_var<double>(0.3, 4);
	Jet v = w.apply(x);
	Jet direct = exp(x);
	for (int i = 0; i <= 4; i++) CHECK(v.c[i] == doctest::Approx(direct.c[i]).epsilon(1e-12));

	BasicJet<Dual> xd = jet_var<Dual>(0.3, 3);
	CHECK_THROWS_AS(w.apply(xd), GeometryError);
}

TEST_CASE("space form signs") {
	CHECK(SpaceFormSign::of(WarpFunction::sin()).eps == 1);
	CHECK(SpaceFormSign::of(WarpFunction::sinh()).eps == -1);
	CHECK(SpaceFormSign::of(WarpFunction::constant(1.0)).eps == 0);
	CHECK_THROWS_AS(SpaceFormSign::of(WarpFunction::identity()), GeometryError);
}

TEST_CASE("christoffel data") {
	ModelManifold M{3, WarpFunction::sin(), 0.0, M_PI};
	auto rho = jet_var<double>(1.0, 4);
	auto ch = christoffel_model(M, rho);
	CHECK(ch.minus_f_fprime.c[0] == doctest::Approx(-std::sin(1.0) * std::cos(1.0)));
	CHECK(ch.fprime_over_f.c[0] == doctest::Approx(std::cos(1.0) / std::sin(1.0)));

	SurfaceOfRevolution S{WarpFunction::sin(), WarpFunction::constant(1.0), 0.0, M_PI};
	Jet alpha = jet_const(0.7, 0.0, 4);
	auto cs = christoffel_surface(S, alpha);
	CHECK(cs.g112.c[0] == doctest::Approx(std::cos(0.7) / std::sin(0.7)));
	CHECK(cs.g211.c[0] == doctest::Approx(-std::sin(0.7) * std::cos(0.7)));
	CHECK(cs.g222.c[0] == doctest::Approx(0.0));
}

TEST_CASE("radial operators on hand examples") {
	// flat cone f = rho, flat target h = const: L(F) = -(F'' + (m-1)/rho F')
	ModelManifold M{4, WarpFunction::identity(), 0.0, 1e9};
	double rho0 = 1.3;
	auto rho = jet_var<double>(rho0, 6);
	Jet alpha = jet_const(0.0, rho0, 6);
	Jet F = rho * rho; // F = rho^2: F'' = 2, F' = 2 rho
	Jet L = radial_laplacian(M, WarpFunction::constant(1.0), alpha, F);
	CHECK(L.c[0] == doctest::Approx(-(2.0 + 3.0 * 2.0)).epsilon(1e-13));

	Jet div = radial_divergence(M, F);
	CHECK(div.c[0] == doctest::Approx(2.0 * rho0 + 3.0 * rho0).epsilon(1e-13));

	// sin target mass term: L(F) includes +(m-1) F h'(alpha)^2 / f^2
	Jet alpha2 = jet_const(0.5, rho0, 6);
	Jet L2 = radial_laplacian(M, WarpFunction::sin(), alpha2, F);
	double mass = 3.0 * rho0 * rho0 * std::cos(0.5) * std::cos(0.5) / (rho0 * rho0);
	CHECK(L2.c[0] == doctest::Approx(-(2.0 + 6.0) + mass).epsilon(1e-13));
}

TEST_CASE("interval membership") {
	ModelManifold M{2, WarpFunction::sin(), 0.0, M_PI};
	CHECK(M.contains(1.0));
	CHECK(!M.contains(0.0));
	CHECK(!M.contains(3.5));
}
