#include "wb/conformal.hpp"

#include <cmath>

namespace wb {

namespace {

ModelManifold space_form(int m, int eps) {
	if (eps == +1) return {m, WarpFunction::sin(), 0.0, M_PI};
	if (eps == -1) return {m, WarpFunction::sinh(), 0.0, 1e9};
	throw GeometryError("eps must be +1 or -1");
}

struct RadialCtx {
	ModelManifold M;
	Jet rho, g, gd, f, fd;
	int m;
};

RadialCtx make_ctx(const ConformalFactor& cf, double rho0, int K) {
	if (cf.m < 3) throw GeometryError("conformal operators need m >= 3");
	RadialCtx c{space_form(cf.m, cf.eps)};
	c.m = cf.m;
	c.g = cf.gamma.eval(rho0, K);
	c.rho = jet_var<double>(rho0, K);
	c.gd = derivative(c.g);
	c.f = c.M.f.apply(c.rho);
	c.fd = c.M.f.apply_d(c.rho);
	return c;
}

// rough Laplacian on radial fields of the underlying space form
Jet Lbar(const RadialCtx& c, const Jet& F) { return radial_laplacian(c.M, c.M.f, c.rho, F); }

// conformal rough Laplacian: e^{-2 gamma} (Lbar(F) - (m-2) gamma' F')
Jet Ltilde(const RadialCtx& c, const Jet& F) {
	Jet base = Lbar(c, F);
	Jet drift = lax::mul(c.gd, derivative(F)) * double(c.m - 2);
	Jet e2 = exp(fit(c.g, base.order() < c.g.order() ? base.order() : c.g.order()) * (-2.0));
	return lax::mul(e2, lax::sub(base, drift));
}

Jet tau_tilde_jet(const RadialCtx& c) {
	// (m-2) e^{-2 gamma} gamma'
	Jet e2 = exp(fit(c.g, c.g.order() - 1) * (-2.0));
	return lax::mul(e2, c.gd) * double(c.m - 2);
}

} // namespace

Jet tau_tilde(const ConformalFactor& cf, double rho0, int K) {
	auto c = make_ctx(cf, rho0, K + 1);
	return fit(tau_tilde_jet(c), K);
}

double hat_tau4_radial(const ConformalFactor& cf, double rho0) {
	auto c = make_ctx(cf, rho0, 4);
	const double m = c.m, eps = cf.eps;
	double g1 = c.gd.c[0];
	Jet lap = Lbar(c, c.gd); // order 1
	double lead_lap = lap.c[0];
	double grad_sq = derivative(lax::mul(c.gd, c.gd)).c[0]; // (gamma'^2)'
	double scalar_lap = -(derivative(c.gd).c[0] + (m - 1) * (c.fd.c[0] / c.f.c[0]) * g1);
	double bracket = (m * m + 2 * m - 2) * scalar_lap -
	                 (m - 1) * (m * m - 4 * m - 32) * g1 * g1 + eps * (m - 1) * (m - 1);
	double e8 = std::exp(-8.0 * c.g.c[0]);
	return e8 * (m - 2) *
	       ((m - 1) * lead_lap + 0.5 * (13 * m - 14) * grad_sq - bracket * g1);
}

double hat_tau4_via_field(const ConformalFactor& cf, double rho0) {
	auto c = make_ctx(cf, rho0, 5);
	const double m = c.m, eps = cf.eps;
	Jet T = tau_tilde_jet(c);                     // order 4
	Jet e4 = exp(fit(c.g, T.order()) * (-4.0));
	Jet e2 = exp(fit(c.g, T.order()) * (-2.0));
	double main = (m - 1) * Ltilde(c, lax::mul(e4, T)).c[0];
	double divT = radial_divergence(c.M, T).c[0];
	double Tv = T.c[0], Td = derivative(T).c[0], g1 = c.gd.c[0];
	double inner = (m - 2) * divT * Tv + (m - 2) * Tv * Td + (m - 4) * Tv * Tv * g1 +
	               (m - 2) * (m - 4) * (Tv * g1) * Tv + derivative(lax::mul(T, T)).c[0] -
	               (m - 1) * (m - 1) * eps * e2.c[0] * Tv;
	return main + e4.c[0] * inner;
}

double full_tau4_identity(const ConformalFactor& cf, double rho0) {
	auto c = make_ctx(cf, rho0, 8);
	const double m = c.m, eps = cf.eps;
	Jet T = tau_tilde_jet(c);    // order 7
	Jet L1 = Ltilde(c, T);       // order 5
	Jet L2 = Ltilde(c, L1);      // order 3
	Jet L3 = Ltilde(c, L2);      // order 1
	double e2 = std::exp(-2.0 * c.g.c[0]);
	double bracket = (1.0 - m) * L2.c[0] - T.c[0] * derivative(L1).c[0] -
	                 L1.c[0] * derivative(T).c[0] + radial_divergence(c.M, L1).c[0] * T.c[0] +
	                 radial_divergence(c.M, T).c[0] * L1.c[0];
	return L3.c[0] + eps * e2 * bracket;
}

double sphere_ode_rhs(int m, double rho, double g1, double g2) {
	double ct = 1.0 / std::tan(rho);
	return (m * m - 4.0 * m - 32.0) * g1 * g1 * g1 + (m * m + 2.0 * m - 2.0) * ct * g1 * g1 -
	       (m - 1.0) * ct * g2 + g1 * ((m + 16.0) * g2 + (m - 1.0) * (ct * ct - 1.0));
}

double hyperbolic_ode_rhs(int m, double rho, double g1, double g2) {
	double ct = 1.0 / std::tanh(rho);
	return (m * m - 4.0 * m - 32.0) * g1 * g1 * g1 + (m * m + 2.0 * m - 2.0) * ct * g1 * g1 -
	       (m - 1.0) * ct * g2 + g1 * ((m + 16.0) * g2 + (m - 1.0) * (ct * ct + 1.0));
}

double beta_rhs(int m, double t, double beta, double dbeta) {
	double w = t * t - 1.0;
	return (m * m - 4.0 * m - 32.0) * beta * beta * beta +
	       (m * m + 3.0 * m + 14.0) * (t / w) * beta * beta +
	       beta * ((m + 16.0) * dbeta + (m - 2.0) / w) - (m + 2.0) * (t / w) * dbeta;
}

OdeOutcome beta_blowup_scan(int m, double beta0, double dbeta0, double t_end, double rel_tol,
                            double escape) {
	auto rhs = [m](double t, const std::vector<double>& y) {
		return std::vector<double>{y[1], beta_rhs(m, t, y[0], y[1])};
	};
	return rk_integrate(rhs, {beta0, dbeta0}, 0.0, t_end, rel_tol, escape);
}

double change_of_variables_residual(int m, int eps, double g1_at_mid, double g2_at_mid,
                                    double rho_from, double rho_to, int n_samples) {
	auto rhs = [&](double rho, const std::vector<double>& y) {
		double g3 = eps > 0 ? sphere_ode_rhs(m, rho, y[0], y[1])
		                    : hyperbolic_ode_rhs(m, rho, y[0], y[1]);
		return std::vector<double>{y[1], g3};
	};
	double worst = 0.0;
	for (int i = 1; i <= n_samples; i++) {
		double rho = rho_from + (rho_to - rho_from) * double(i) / n_samples;
		std::vector<double> y{g1_at_mid, g2_at_mid};
		if (rho != rho_from) {
			OdeOutcome o = rk_integrate(rhs, y, rho_from, rho, 1e-12, 1e10);
			if (o.status != OdeStatus::completed) throw NumericsError("gamma ODE failed");
			y = o.samples.back().second;
		}
		double g1 = y[0], g2 = y[1];
		double g3 = eps > 0 ? sphere_ode_rhs(m, rho, g1, g2) : hyperbolic_ode_rhs(m, rho, g1, g2);
		double t, beta, dbeta, ddbeta;
		if (eps > 0) {
			double s = std::sin(rho), cθ = std::cos(rho);
			t = cθ;
			beta = -g1 / s;
			double num = g2 * s - g1 * cθ;
			dbeta = num / (s * s * s);
			double dnum_part = (g3 + g1) * s * s - 3.0 * cθ * num;
			ddbeta = -dnum_part / (s * s * s * s * s);
		} else {
			double s = std::sinh(rho), cθ = std::cosh(rho);
			t = cθ;
			beta = g1 / s;
			double num = g2 * s - g1 * cθ;
			dbeta = num / (s * s * s);
			double dnum_part = (g3 - g1) * s * s - 3.0 * cθ * num;
			ddbeta = dnum_part / (s * s * s * s * s);
		}
		worst = std::max(worst, std::abs(ddbeta - beta_rhs(m, t, beta, dbeta)));
	}
	return worst;
}

} // namespace wb
