#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "wb/spectrum.hpp"

using namespace wb;

namespace {

// closed-form eigenvalue list of a mode block: each of lambda-/lambda+ doubled
void check_block_against_closed_form(const SpectrumProblem& P, int mode, double rel = 1e-7) {
	auto B = fourier_block(P, mode);
	auto cf = closed_form_block(P, mode);
	REQUIRE(cf.valid);
	REQUIRE(B.dim == 4);
	double scale = std::max({1.0, std::abs(cf.A), std::abs(cf.B), std::abs(cf.C)});
	// diagonal: w-pair carries A, alpha-pair carries B
	CHECK(std::abs(B.M[0 * 4 + 0] - cf.A) / scale < rel);
	CHECK(std::abs(B.M[1 * 4 + 1] - cf.A) / scale < rel);
	CHECK(std::abs(B.M[2 * 4 + 2] - cf.B) / scale < rel);
	CHECK(std::abs(B.M[3 * 4 + 3] - cf.B) / scale < rel);
	// coupling: w-sin with alpha-cos at +C, w-cos with alpha-sin at -C
	CHECK(std::abs(B.M[1 * 4 + 2] - cf.C) / scale < rel);
	CHECK(std::abs(B.M[0 * 4 + 3] + cf.C) / scale < rel);
	// remaining entries vanish
	CHECK(std::abs(B.M[0 * 4 + 1]) / scale < rel);
	CHECK(std::abs(B.M[0 * 4 + 2]) / scale < rel);
	CHECK(std::abs(B.M[1 * 4 + 3]) / scale < rel);
	CHECK(std::abs(B.M[2 * 4 + 3]) / scale < rel);
	// doubled spectrum {lambda-, lambda-, lambda+, lambda+}
	double escale = std::max({1.0, std::abs(cf.lambda_minus), std::abs(cf.lambda_plus)});
	CHECK(std::abs(B.evals[0] - cf.lambda_minus) / escale < rel);
	CHECK(std::abs(B.evals[1] - cf.lambda_minus) / escale < rel);
	CHECK(std::abs(B.evals[2] - cf.lambda_plus) / escale < rel);
	CHECK(std::abs(B.evals[3] - cf.lambda_plus) / escale < rel);
}

} // namespace

TEST_CASE("circle blocks match the closed-form entries") {
	for (int r : {2, 3, 4})
		for (int k : {1, 2, 3, 5})
			for (int mode : {1, 2, 3, k + 2})
				check_block_against_closed_form(circle_problem(r, k), mode);
}

TEST_CASE("paraboloid blocks match the closed-form entries") {
	for (int r : {3, 4})
		for (int mode : {1, 2, 4})
			check_block_against_closed_form(paraboloid_problem(r), mode);
}

TEST_CASE("circle mode zero at r = 2 is diagonal") {
	for (int k : {1, 2, 4}) {
		auto P = circle_problem(2, k);
		auto B = fourier_block(P, 0);
		auto cf = closed_form_block(P, 0);
		REQUIRE(cf.S0_valid);
		REQUIRE(B.dim == 2);
		CHECK(cf.S0_w == 0.0);
		CHECK(cf.S0_a == doctest::Approx(-std::pow(double(k), 4)));
		double scale = std::max(1.0, std::pow(double(k), 4));
		CHECK(std::abs(B.M[0] - cf.S0_w) / scale < 1e-7);
		CHECK(std::abs(B.M[3] - cf.S0_a) / scale < 1e-7);
		CHECK(std::abs(B.M[1]) / scale < 1e-7);
	}
}

TEST_CASE("rotation mode carries an exact kernel") {
	// at mode = k the lower eigenvalue vanishes: rotations of the critical circle
	for (int r : {2, 3, 4})
		for (int k : {1, 2, 3, 4, 5}) {
			auto cf = closed_form_block(circle_problem(r, k), k);
			REQUIRE(cf.valid);
			CHECK(cf.lambda_plus > 0.0);
			CHECK(std::abs(cf.lambda_minus) < 1e-7 * cf.lambda_plus);
		}
}

TEST_CASE("hessian pairing is symmetric") {
	auto P = circle_problem(3, 2);
	ModeField V{[](double g, int K) { return cos(jet_var<double>(g, K) * 2.0); },
	            [](double g, int K) { return sin(jet_var<double>(g, K)) * 0.3; }};
	ModeField W{[](double g, int K) { return sin(jet_var<double>(g, K) * 3.0) * 0.7; },
	            [](double g, int K) { return cos(jet_var<double>(g, K) * 2.0); }};
	double vw = hessian_pair(P, V, W, 48);
	double wv = hessian_pair(P, W, V, 48);
	CHECK(vw == doctest::Approx(wv).epsilon(1e-11));
}

TEST_CASE("index and nullity of critical circles") {
	struct Case {
		int r, k, index;
	};
	for (Case c : {Case{2, 1, 1}, Case{3, 2, 3}, Case{4, 1, 1}, Case{2, 3, 5}}) {
		auto out = index_nullity(circle_problem(c.r, c.k), 2 * c.k + 6);
		CHECK(out.index == c.index); // 1 + 2(k-1)
		CHECK(out.nullity == 3);
		CHECK(out.tail_certified);
	}
}

TEST_CASE("index and nullity of paraboloid parallels") {
	for (int r : {3, 4}) {
		auto out = index_nullity(paraboloid_problem(r), 8);
		CHECK(out.index == 1);
		CHECK(out.nullity == 1);
		CHECK(out.tail_certified);
	}
}

TEST_CASE("paraboloid parallels need r at least three") {
	CHECK_THROWS_AS(paraboloid_problem(2), NumericsError);
}
