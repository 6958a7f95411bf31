#include "wb/curves.hpp"

#include <cmath>

namespace wb {

CurvePair<double> curve_tension(const CurveMap& c, double gamma0, int K) {
	CurvePair<double> in{c.w(gamma0, K + 2), c.alpha(gamma0, K + 2)};
	return detail::curve_tau(c.target, in);
}

std::vector<CurvePair<double>> curve_t_sequence(const CurveMap& c, double gamma0, int r) {
	CurvePair<double> in{c.w(gamma0, 2 * r), c.alpha(gamma0, 2 * r)};
	std::vector<CurvePair<double>> out;
	auto T = detail::curve_tau(c.target, in);
	out.push_back(T);
	for (int j = 2; j < r; j++) {
		T = detail::curve_step(c.target, in, T);
		out.push_back(T);
	}
	return out;
}

double curve_energy(const CurveMap& c, int r, const Quadrature& q) {
	auto f = [&](double g) {
		CurvePair<double> in{c.w(g, r), c.alpha(g, r)};
		return detail::curve_energy_density(c.target, in, r);
	};
	return integrate(q, f, 0.0, 2.0 * M_PI);
}

ReparamTension geodesic_reparam_tension(const PolyReal& mu, int r) {
	ReparamTension out;
	int d = mu.degree();
	double coef = 0.0;
	if (d >= 2 * r) {
		// mu^{(2r)} is constant only when deg mu = 2r; report its value at 0
		coef = mu.coeffs.size() > size_t(2 * r) ? mu.coeffs[2 * r] : 0.0;
		for (int j = 2; j <= 2 * r; j++) coef *= j;
	}
	out.tau_r_coefficient = (r % 2 ? 1.0 : -1.0) * coef;
	out.r_harmonic = d <= 2 * r - 1;
	out.proper = out.r_harmonic && d >= 2;
	return out;
}

} // namespace wb
