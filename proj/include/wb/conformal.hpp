#pragma once
#include "equivariant.hpp"
#include "geometry.hpp"
#include "jet.hpp"
#include "numerics.hpp"

// Radially conformal metrics e^{2 gamma} g on the space forms (sphere eps=+1,
// hyperbolic eps=-1): the two fourth-order curvature-tension expressions, the
// reduced third-order ODEs, the beta equation with blow-up search, and the
// order-7 operator for the identity map.

namespace wb {

struct ConformalFactor {
	Profile gamma; // radial conformal exponent
	int eps = +1;  // +1 sphere (f = sin), -1 hyperbolic (f = sinh)
	int m = 3;     // dimension, m >= 3
};

// radial component of tau of the conformal identity: (m-2) e^{-2 gamma} gamma'
Jet tau_tilde(const ConformalFactor& cf, double rho0, int K);

// the expression written directly in gamma (degree-3 in derivatives)
double hat_tau4_radial(const ConformalFactor& cf, double rho0);

// the same quantity assembled from the tau-tilde field through the conformal
// rough Laplacian and divergence; an independent evaluation path
double hat_tau4_via_field(const ConformalFactor& cf, double rho0);

// radial component of the full fourth-order tension of the conformal identity
// (order 7 in gamma)
double full_tau4_identity(const ConformalFactor& cf, double rho0);

// third-order reduced ODEs: value of gamma''' given (rho, gamma', gamma'')
double sphere_ode_rhs(int m, double rho, double g1, double g2);
double hyperbolic_ode_rhs(int m, double rho, double g1, double g2);

// beta(t) form: beta'' as a function of (t, beta, beta')
double beta_rhs(int m, double t, double beta, double dbeta);

// integrate the beta equation symmetrically from 0 with blow-up detection
OdeOutcome beta_blowup_scan(int m, double beta0, double dbeta0, double t_end,
                            double rel_tol = 1e-10, double escape = 1e8);

// transport a sphere-ODE solution through t = cos rho (or cosh rho for
// eps=-1), and return the worst beta-equation residual along the trajectory
double change_of_variables_residual(int m, int eps, double g1_at_mid, double g2_at_mid,
                                    double rho_from, double rho_to, int n_samples = 40);

} // namespace wb
