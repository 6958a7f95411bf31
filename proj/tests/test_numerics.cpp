#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "wb/numerics.hpp"

using namespace wb;

TEST_CASE("gauss rule is exact to degree 2n-1") {
	std::vector<double> x, w;
	gauss_legendre_rule(6, x, w);
	CHECK(x.size() == 6);
	double sum_w = 0.0;
	for (double v : w) sum_w += v;
	CHECK(sum_w == doctest::Approx(2.0).epsilon(1e-14));

	Quadrature q{QuadKind::gauss_legendre, 6};
	// degree 11 monomial over [0,1]: exact
	double v11 = integrate(q, [](double t) { return std::pow(t, 11); }, 0.0, 1.0);
	CHECK(v11 == doctest::Approx(1.0 / 12.0).epsilon(1e-13));
	// degree 12 is not exact for n=6
	double v12 = integrate(q, [](double t) { return std::pow(t, 12); }, 0.0, 1.0);
	CHECK(std::abs(v12 - 1.0 / 13.0) > 1e-15);
}

TEST_CASE("periodic trapezoid nails trigonometric polynomials") {
	Quadrature q{QuadKind::periodic_trapezoid, 16};
	double v = integrate(
	    q, [](double t) { return 1.0 + std::cos(3 * t) * std::sin(2 * t) + std::cos(5 * t); }, 0.0,
	    2.0 * M_PI);
	CHECK(v == doctest::Approx(2.0 * M_PI).epsilon(1e-13));
	double m2 = integrate(q, [](double t) { return std::sin(4 * t) * std::sin(4 * t); }, 0.0,
	                      2.0 * M_PI);
	CHECK(m2 == doctest::Approx(M_PI).epsilon(1e-13));
}

TEST_CASE("adaptive quadrature converges on a sharp integrand") {
	double v = integrate_adaptive([](double t) { return 1.0 / (1e-4 + t * t); }, -1.0, 1.0, 1e-11);
	double exact = 2.0 / 1e-2 * std::atan(1.0 / 1e-2);
	CHECK(v == doctest::Approx(exact).epsilon(1e-9));
}

TEST_CASE("non-finite samples are rejected") {
	Quadrature q{QuadKind::gauss_legendre, 4};
	CHECK_THROWS_AS(integrate(q, [](double) { return std::nan(""); }, 0.0, 1.0), NonFiniteSample);
}

TEST_CASE("runge-kutta reproduces the exponential") {
	auto rhs = [](double, const std::vector<double>& y) { return std::vector<double>{y[0]}; };
	auto out = rk_integrate(rhs, {1.0}, 0.0, 2.0, 1e-11, 1e12);
	CHECK(out.status == OdeStatus::completed);
	CHECK(out.samples.back().second[0] == doctest::Approx(std::exp(2.0)).epsilon(1e-9));
}

TEST_CASE("runge-kutta integrates backwards") {
	auto rhs = [](double t, const std::vector<double>& y) {
		return std::vector<double>{std::cos(t) * y[0]};
	};
	auto out = rk_integrate(rhs, {1.0}, 0.0, -1.5, 1e-11, 1e12);
	CHECK(out.status == OdeStatus::completed);
	CHECK(out.samples.back().second[0] ==
	      doctest::Approx(std::exp(std::sin(-1.5))).epsilon(1e-9));
}

TEST_CASE("blow-up detection on y' = y^2") {
	// y(t) = 1/(1-t) blows up at t=1
	auto rhs = [](double, const std::vector<double>& y) { return std::vector<double>{y[0] * y[0]}; };
	auto out = rk_integrate(rhs, {1.0}, 0.0, 2.0, 1e-10, 1e8);
	CHECK(out.status == OdeStatus::blow_up);
	CHECK(out.t_escape == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("tolerance domain is enforced") {
	auto rhs = [](double, const std::vector<double>& y) { return std::vector<double>{y[0]}; };
	CHECK_THROWS_AS(rk_integrate(rhs, {1.0}, 0.0, 1.0, 1e-15, 1e8), NumericsError);
	CHECK_THROWS_AS(rk_integrate(rhs, {1.0}, 0.0, 1.0, 0.5, 1e8), NumericsError);
}

TEST_CASE("polynomial roots") {
	// (x-0.2)(x-0.5)(x-0.9) expanded, ascending
	PolyReal p{{-0.09, 0.73, -1.6, 1.0}};
	auto roots = real_roots(p, 0.0, 1.0);
	REQUIRE(roots.size() == 3);
	CHECK(roots[0] == doctest::Approx(0.2).epsilon(1e-10));
	CHECK(roots[1] == doctest::Approx(0.5).epsilon(1e-10));
	CHECK(roots[2] == doctest::Approx(0.9).epsilon(1e-10));

	// no roots inside the window
	auto none = real_roots(p, 0.95, 1.0);
	CHECK(none.empty());

	// double root is still found once
	PolyReal dbl{{0.25, -1.0, 1.0}}; // (x-1/2)^2
	auto r2 = real_roots(dbl, 0.0, 1.0);
	REQUIRE(r2.size() == 1);
	CHECK(r2[0] == doctest::Approx(0.5).epsilon(1e-6));

	PolyReal big{std::vector<double>(11, 1.0)};
	CHECK_THROWS_AS(real_roots(big, 0.0, 1.0), DegreeTooHigh);
}

TEST_CASE("poly eval and derivative") {
	PolyReal p{{1.0, 2.0, 3.0}};
	CHECK(p.degree() == 2);
	CHECK(p.eval(2.0) == doctest::Approx(17.0));
	CHECK(p.deriv_eval(2.0) == doctest::Approx(14.0));
}

TEST_CASE("jacobi eigen solver reconstructs the matrix") {
	std::vector<double> M{4.0, 1.0, -2.0, 0.5, 1.0,  3.0, 0.0, 1.0,
	                      -2.0, 0.0, 2.0, 0.7, 0.5, 1.0, 0.7, 5.0};
	std::vector<double> Q;
	auto ev = sym_eigen(M, 4, &Q);
	REQUIRE(ev.size() == 4);
	for (int i = 0; i + 1 < 4; i++) CHECK(ev[i] <= ev[i + 1]);
	// M = Q diag(ev) Q^T entrywise
	for (int i = 0; i < 4; i++)
		for (int j = 0; j < 4; j++) {
			double acc = 0.0;
			for (int k = 0; k < 4; k++) acc += Q[i * 4 + k] * ev[k] * Q[j * 4 + k];
			CHECK(acc == doctest::Approx(M[i * 4 + j]).epsilon(1e-10));
		}

	std::vector<double> asym{1.0, 2.0, 0.0, 1.0};
	CHECK_THROWS_AS(sym_eigen(asym, 2), NotSymmetric);
}
