#include "wb/closed_forms.hpp"

#include <cmath>

namespace wb {

double hypersphere_density(int r, double alpha) {
	double s = std::sin(alpha), c = std::cos(alpha);
	return s * s * std::pow(c * c, r - 1);
}

double hypersphere_critical(int r) { return std::asin(1.0 / std::sqrt(double(r))); }

double clifford_density(const CliffordParams& cp, double alpha) {
	double s2 = std::sin(alpha) * std::sin(alpha), c2 = 1.0 - s2;
	double mix = cp.p / (cp.R1 * cp.R1) * c2 + cp.q / (cp.R2 * cp.R2) * s2;
	return s2 * c2 * std::pow(mix, cp.r - 2);
}

PolyReal clifford_polynomial(int p, int q, int r) {
	return {{double(-p), double(2 * p + r * p), double(q - p - r * (q + 2 * p)),
	         double(r * (p + q))}};
}

std::vector<double> isometric_roots(int p, int q, int r) {
	return real_roots(clifford_polynomial(p, q, r), 0.0, 1.0);
}

double general_clifford_condition(int p, int q, double R1, double R2, int r, double alpha) {
	double a = p / (R1 * R1), b = q / (R2 * R2);
	double s2 = std::sin(alpha) * std::sin(alpha);
	return a + ((r - 1) * (b - a) - 2.0 * a) * s2 + r * (a - b) * s2 * s2;
}

PolyReal constant_solution_cubic(int m) {
	double m2 = double(m) * m, m3 = m2 * m;
	return {{1060 * m3 - 18084 * m2 + 96252 * m - 159868,
	         512 * m3 - 6368 * m2 + 21856 * m - 16000,
	         100 * m3 - 724 * m2 + 1148 * m - 524,
	         8 * m3 - 24 * m2 + 24 * m - 8}};
}

ConstantSolutionGate constant_solution_gate(int m) {
	ConstantSolutionGate g;
	auto push = [&](double x) {
		if (!(x > -1.0 && x < 1.0)) return;
		for (double y : g.roots_x)
			if (std::abs(y - x) < 1e-12) return;
		g.roots_x.push_back(x);
	};
	double m1 = m - 1.0;
	push((17.0 - 5.0 * m) / m1);
	double disc = -199.0 * m * m + 2882.0 * m - 9399.0;
	if (disc >= 0.0) {
		double u = (-15.0 * m * m + 112.0 * m - 97.0) / (m1 * m1);
		double v = std::sqrt(disc) / m1;
		push(0.25 * (u + v));
		push(0.25 * (u - v));
	}
	for (double x : g.roots_x) g.alpha_values.push_back(0.5 * std::acos(x));
	return g;
}

double cylinder_laplacian_power_coefficient(int m, int r) {
	double c = std::pow(2.0, r - 1);
	for (int j = 2; j <= r - 1; j++) c *= j;
	for (int k = 1; k <= r; k++) c *= (m - 2 * k);
	return c;
}

bool cylinder_harmonicity(CylinderProfile p, int m, int r, int rprime) {
	switch (p) {
		case CylinderProfile::log_rho: return m % 2 == 0 && r >= m / 2;
		case CylinderProfile::rho_sq: return r >= 2;
		case CylinderProfile::rho_sq_log_rho: return m % 2 == 0 && r >= m / 2 + 1;
		case CylinderProfile::rho_pow: {
			// rho^{2r'-m}; for even nonnegative exponents 2j the profile collapses
			// to a polynomial already annihilated once r exceeds j
			int e = 2 * rprime - m;
			if (e >= 0 && e % 2 == 0 && r >= e / 2 + 1) return true;
			return r >= rprime && rprime >= 2;
		}
	}
	return false;
}

Profile cylinder_profile(CylinderProfile p, int m, int rprime) {
	switch (p) {
		case CylinderProfile::log_rho:
			return {[](double r0, int K) { return fit(log(jet_var<double>(r0, std::max(K, 1))), K); },
			        "log rho"};
		case CylinderProfile::rho_sq:
			return {[](double r0, int K) {
				        auto v = jet_var<double>(r0, std::max(K, 2));
				        return fit(v * v, K);
			        },
			        "rho^2"};
		case CylinderProfile::rho_sq_log_rho:
			return {[](double r0, int K) {
				        int KK = std::max(K, 2);
				        auto v = jet_var<double>(r0, KK);
				        return fit(v * v * log(v), K);
			        },
			        "rho^2 log rho"};
		case CylinderProfile::rho_pow: {
			double e = 2.0 * rprime - m;
			return {[e](double r0, int K) {
				        return fit(pow(jet_var<double>(r0, std::max(K, 1)), e), K);
			        },
			        "rho^{2r'-m}"};
		}
	}
	throw JetError("bad cylinder profile");
}

Profile conformal_profile(const ModelManifold& domain, const WarpFunction& target, double rho_ref,
                          double alpha_ref) {
	auto f = domain.f;
	Profile pr;
	pr.description = "conformal ODE alpha' = h(alpha)/f(rho)";
	pr.eval = [f, target, rho_ref, alpha_ref](double rho0, int K) {
		double a0 = alpha_ref;
		if (rho0 != rho_ref) {
			auto rhs = [&](double t, const std::vector<double>& y) {
				return std::vector<double>{target.value(y[0]) / f.value(t)};
			};
			OdeOutcome o = rk_integrate(rhs, {alpha_ref}, rho_ref, rho0, 1e-12, 1e12);
			if (o.status != OdeStatus::completed) throw NumericsError("conformal profile ODE failed");
			a0 = o.samples.back().second[0];
		}
		if (K == 0) return jet_const(a0, rho0, 0);
		// Taylor recursion: coefficient k of alpha from coefficient k-1 of the RHS
		Jet a = jet_const(a0, rho0, K);
		Jet rho = jet_var<double>(rho0, K);
		for (int k = 1; k <= K; k++) {
			Jet trunc = fit(a, k - 1);
			Jet rhsj = lax::div(target.apply(trunc), fit(f.apply(rho), k - 1));
			a.c[k] = rhsj.c[k - 1] / double(k);
		}
		return a;
	};
	return pr;
}

ConformalSweepReport conformal_nonexistence_sweep(const ModelManifold& domain,
                                                  const WarpFunction& target, int r, double alpha0,
                                                  double rho_at_alpha0, double a, double b,
                                                  int n_samples) {
	ConformalSweepReport rep;
	Profile pr = conformal_profile(domain, target, rho_at_alpha0, alpha0);
	ReducedProblem P{domain, target, r, Flavor::r_energy};
	for (int i = 0; i < n_samples; i++) {
		double rho = a + (b - a) * (i + 0.5) / n_samples;
		double res = el_residual(P, pr, rho).residual;
		rep.rows.push_back({rho, res});
		rep.max_abs_residual = std::max(rep.max_abs_residual, std::abs(res));
	}
	return rep;
}

} // namespace wb
