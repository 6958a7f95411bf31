#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "wb/condition_c.hpp"
#include "wb/numerics.hpp"

using namespace wb;

TEST_CASE("one-sided bump ingredient") {
	// identically zero on the closed left half line
	for (double x : {-1.0, -1e-6, 0.0}) {
		Jet j = cutoff_bump(x, 5);
		for (double c : j.c) CHECK(c == 0.0);
	}
	// exp(-1/x) and its jet on the right
	Jet j = cutoff_bump(0.5, 4);
	Jet expect = exp(jet_const(-1.0, 0.5, 4) / jet_var<double>(0.5, 4));
	for (int i = 0; i <= 4; i++) CHECK(j.c[i] == doctest::Approx(expect.c[i]).epsilon(1e-13));
	// sharpness parameter
	CHECK(cutoff_bump(0.5, 0, 2.0).c[0] == doctest::Approx(std::exp(-4.0)).epsilon(1e-14));
}

TEST_CASE("cutoff transition: plateaus, monotonicity, flat seams") {
	for (CutoffKind kind : {CutoffKind::mollified_step, CutoffKind::bump_quotient}) {
		// hard plateaus outside [1, 2], to all orders
		for (double rho : {0.2, 0.9, 1.0}) {
			Jet j = cutoff_xi(rho, 6, kind);
			for (double c : j.c) CHECK(c == 0.0);
		}
		for (double rho : {2.0, 2.3, 5.0}) {
			Jet j = cutoff_xi(rho, 6, kind);
			CHECK(j.c[0] == 1.0);
			for (size_t i = 1; i < j.c.size(); i++) CHECK(j.c[i] == 0.0);
		}
		// monotone across the transition, strictly so away from the plateaus
		double prev = 0.0;
		for (int i = 1; i < 40; i++) {
			double rho = 1.0 + i / 40.0;
			double v = cutoff_xi(rho, 0, kind).c[0];
			CHECK(v >= prev);
			CHECK(v <= 1.0);
			if (rho >= 1.1 && rho <= 1.9) CHECK(v > prev);
			prev = v;
		}
		// seams are flat: approaching the ends, derivatives through order six
		// die off faster than any power
		for (double d : {1e-2}) {
			Jet lo = cutoff_xi(1.0 + d, 6, kind);
			Jet hi = cutoff_xi(2.0 - d, 6, kind);
			for (int i = 0; i <= 6; i++) {
				CHECK(std::abs(lo.c[i]) < 1e-12);
				CHECK(std::abs(hi.c[i] - (i == 0 ? 1.0 : 0.0)) < 1e-12);
			}
		}
	}
	// the quotient construction is symmetric about the midpoint
	CHECK(cutoff_xi(1.5, 0, CutoffKind::bump_quotient).c[0] == doctest::Approx(0.5).epsilon(1e-14));
	double q1 = cutoff_xi(1.3, 0, CutoffKind::bump_quotient).c[0];
	double q2 = cutoff_xi(1.7, 0, CutoffKind::bump_quotient).c[0];
	CHECK(q1 + q2 == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("interpolated profile matches its two regimes") {
	double a = 10.0;
	for (CutoffKind kind : {CutoffKind::mollified_step, CutoffKind::bump_quotient}) {
		Profile p = condition_c_profile(a, kind);
		// inside: the inverse-stereographic angle
		for (double rho : {0.3, 0.8, 1.0}) {
			Jet j = p.eval(rho, 3);
			Jet expect = atan(jet_var<double>(rho, 3) * a) * 2.0;
			for (int i = 0; i <= 3; i++)
				CHECK(j.c[i] == doctest::Approx(expect.c[i]).epsilon(1e-12));
		}
		// outside: the constant map to the pole
		for (double rho : {2.0, 3.0}) {
			Jet j = p.eval(rho, 3);
			CHECK(j.c[0] == doctest::Approx(M_PI).epsilon(1e-14));
			for (int i = 1; i <= 3; i++) CHECK(std::abs(j.c[i]) < 1e-14);
		}
		// the value stays inside (0, pi] across the neck
		for (int i = 0; i <= 20; i++) {
			double v = p.eval(1.0 + i / 20.0, 0).c[0];
			CHECK(v > 0.0);
			CHECK(v <= M_PI + 1e-12);
		}
	}
}

TEST_CASE("the inner region carries no energy density") {
	// 2 arctan(a rho) is a harmonic map of the plane, hence a zero of the
	// quartic density as well
	ModelManifold domain{2, WarpFunction::identity(), 0.0, 1e9};
	ReducedProblem P{domain, WarpFunction::sin(), 4, Flavor::es4_energy};
	Profile p = condition_c_profile(10.0);
	for (double rho : {0.5, 0.95}) {
		CHECK(std::abs(lagrangian(P, p, rho)) < 1e-12);
		CHECK(std::abs(el_residual(P, p, rho).residual) < 1e-8);
	}
}

TEST_CASE("family energy decays along a short ladder") {
	auto rep = energy_ladder(8, 1e-9);
	REQUIRE(rep.rows.size() == 8);
	CHECK(rep.rows[0].a == 2.0);
	CHECK(rep.rows[7].a == 256.0);
	CHECK(rep.monotone);
	for (const auto& row : rep.rows) CHECK(row.energy > 0.0);
	CHECK(rep.final_energy == rep.rows.back().energy);
	// roughly one decade of decay per three doublings at this depth
	CHECK(rep.rows[7].energy < 0.05 * rep.rows[0].energy);
}

TEST_CASE("decay rate does not depend on the cutoff choice") {
	// the tail exponent of E(a) is a property of the family, not the cutoff:
	// compare local slopes d log E / d log a at a = 2^7
	auto slope = [](CutoffKind kind) {
		double e1 = es4_family_energy(64.0, 1e-10, kind);
		double e2 = es4_family_energy(256.0, 1e-10, kind);
		return std::log(e2 / e1) / std::log(4.0);
	};
	double s1 = slope(CutoffKind::mollified_step);
	double s2 = slope(CutoffKind::bump_quotient);
	CHECK(s1 < 0.0);
	CHECK(s2 < 0.0);
	CHECK(std::abs(s1 - s2) < 0.2 * std::abs(s1));
}

TEST_CASE("pointwise sine bound") {
	for (double a : {10.0, 100.0, 1000.0}) {
		auto sb = sup_sin_bound(a);
		CHECK(sb.bound == doctest::Approx(2.0 * a / (1.0 + a * a)).epsilon(1e-15));
		CHECK(sb.within);
		CHECK(sb.sup_abs_sin > 0.0);
		// the bound is attained at the inner rim, so it is tight
		CHECK(sb.sup_abs_sin > 0.9 * sb.bound);
	}
}

TEST_CASE("infimum gap bookkeeping") {
	CHECK_THROWS_AS(infimum_gap_check({}), NumericsError);
	auto rep = infimum_gap_check({4.0, 16.0, 64.0});
	CHECK(rep.best_a == 64.0);
	CHECK(rep.min_energy > 0.0);
	CHECK(rep.min_energy == doctest::Approx(es4_family_energy(64.0)).epsilon(1e-10));
	CHECK(!rep.attained);
	CHECK(!rep.note.empty());
}
