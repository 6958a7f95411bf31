#include "wb/condition_c.hpp"

#include <cmath>

#include "wb/numerics.hpp"

namespace wb {

Jet cutoff_bump(double x0, int K, double c) {
	if (x0 <= 0.0) return jet_const(0.0, x0, K);
	Jet x = jet_var<double>(x0, std::max(K, 1));
	return fit(exp(jet_const(-c, x0, x.order()) / x), K);
}

namespace {

constexpr double step_sharpness = 0.75;

double step_kernel(double t) {
	if (t <= 0.0 || t >= 1.0) return 0.0;
	return std::exp(-step_sharpness / (t * (1.0 - t)));
}

double step_norm() {
	static const double Z = integrate_adaptive(step_kernel, 0.0, 1.0, 1e-13);
	return Z;
}

Jet xi_mollified(double rho0, int K) {
	double t0 = rho0 - 1.0;
	if (t0 <= 0.0) return jet_const(0.0, rho0, K);
	if (t0 >= 1.0) return jet_const(1.0, rho0, K);
	double Z = step_norm();
	double xi0 = integrate_adaptive(step_kernel, 0.0, t0, 1e-13) / Z;
	if (K == 0) return jet_const(xi0, rho0, 0);
	Jet t = jet_var<double>(rho0, K) - jet_const(1.0, rho0, K);
	Jet g = exp(jet_const(-step_sharpness, rho0, K) / (t * (jet_const(1.0, rho0, K) - t)));
	return antiderivative(fit(g, K - 1) * (1.0 / Z), xi0);
}

Jet xi_quotient(double rho0, int K) {
	Jet e_up = cutoff_bump(rho0 - 1.0, K, 1.0);
	Jet e_dn = cutoff_bump(2.0 - rho0, K, 1.0);
	// 2-rho reverses orientation: flip the odd coefficients
	for (size_t i = 1; i < e_dn.c.size(); i += 2) e_dn.c[i] = -e_dn.c[i];
	e_up.base = rho0;
	e_dn.base = rho0;
	return e_up / (e_up + e_dn);
}

} // namespace

Jet cutoff_xi(double rho0, int K, CutoffKind kind) {
	return kind == CutoffKind::mollified_step ? xi_mollified(rho0, K) : xi_quotient(rho0, K);
}

Profile condition_c_profile(double a, CutoffKind kind) {
	Profile p;
	p.description = "cutoff interpolation toward the constant map";
	p.eval = [a, kind](double rho0, int K) {
		int KK = std::max(K, 1);
		Jet rho = jet_var<double>(rho0, KK);
		Jet at = atan(rho * a) * 2.0;
		Jet xi = cutoff_xi(rho0, KK, kind);
		Jet alpha = at + xi * (jet_const(M_PI, rho0, KK) - at);
		return fit(alpha, K);
	};
	return p;
}

static ReducedProblem annulus_problem() {
	ModelManifold domain{2, WarpFunction::identity(), 0.0, 1e9};
	return {domain, WarpFunction::sin(), 4, Flavor::es4_energy};
}

double es4_family_energy(double a, double rel_tol, CutoffKind kind) {
	ReducedProblem P = annulus_problem();
	Profile alpha = condition_c_profile(a, kind);
	return 2.0 * M_PI * reduced_energy(P, alpha, 1.0, 2.0, rel_tol);
}

LadderReport energy_ladder(int max_pow, double rel_tol, CutoffKind kind) {
	LadderReport rep;
	for (int p = 1; p <= max_pow; p++) {
		double a = std::pow(2.0, p);
		rep.rows.push_back({a, es4_family_energy(a, rel_tol, kind)});
	}
	rep.final_energy = rep.rows.back().energy;
	rep.monotone = true;
	for (size_t i = 0; i + 1 < rep.rows.size(); i++)
		if (rep.rows[i + 1].energy >= rep.rows[i].energy) rep.monotone = false;
	return rep;
}

SupBound sup_sin_bound(double a, int n_samples, double slack, CutoffKind kind) {
	SupBound out;
	out.bound = 2.0 * a / (1.0 + a * a);
	Profile alpha = condition_c_profile(a, kind);
	for (int i = 0; i < n_samples; i++) {
		double rho = 1.0 + double(i) / (n_samples - 1);
		double v = std::abs(std::sin(alpha.eval(rho, 0).c[0]));
		out.sup_abs_sin = std::max(out.sup_abs_sin, v);
	}
	out.within = out.sup_abs_sin <= out.bound + slack;
	return out;
}

InfimumReport infimum_gap_check(const std::vector<double>& a_list, double rel_tol,
                                CutoffKind kind) {
	if (a_list.empty()) throw NumericsError("infimum gap check needs a nonempty parameter list");
	InfimumReport rep;
	rep.min_energy = 1e300;
	for (double a : a_list) {
		double e = es4_family_energy(a, rel_tol, kind);
		if (e < rep.min_energy) {
			rep.min_energy = e;
			rep.best_a = a;
		}
	}
	rep.attained = false;
	rep.note = "infimum 0 is not attained: zero energy forces harmonicity, impossible in this class";
	return rep;
}

} // namespace wb
