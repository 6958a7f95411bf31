#pragma once
#include <string>
#include <vector>

#include "equivariant.hpp"
#include "numerics.hpp"

// Closed-form criteria as executable predicates: hypersphere and Clifford
// energy densities, the Clifford cubic, the constant-solution gate for ball-to-
// sphere maps, and the log rho / polynomial profile catalog on the cylinder.

namespace wb {

// eps_r(alpha) = sin^2 alpha cos^{2(r-1)} alpha
double hypersphere_density(int r, double alpha);
double hypersphere_critical(int r); // arcsin(1/sqrt r)

struct CliffordParams {
	int p = 1, q = 1;
	double R1 = 0.0, R2 = 0.0; // R1^2 + R2^2 = 1
	int r = 2;
};

// eps^C_r(alpha) = sin^2 a cos^2 a [p/R1^2 cos^2 a + q/R2^2 sin^2 a]^{r-2}
double clifford_density(const CliffordParams& c, double alpha);

// P(t) = r(p+q) t^3 + [q - p - r(q+2p)] t^2 + (2p + rp) t - p
PolyReal clifford_polynomial(int p, int q, int r);
std::vector<double> isometric_roots(int p, int q, int r); // roots of P in (0,1)

// p/R1^2 + [(r-1)(q/R2^2 - p/R1^2) - 2 p/R1^2] sin^2 a + r [p/R1^2 - q/R2^2] sin^4 a
double general_clifford_condition(int p, int q, double R1, double R2, int r, double alpha);

struct ConstantSolutionGate {
	std::vector<double> roots_x;      // admissible x = cos(2 alpha*) in (-1,1)
	std::vector<double> alpha_values; // alpha* = (1/2) arccos x
};

// constant profiles of the punctured-ball-to-sphere family at r=4; the cubic in
// x = cos(2 alpha*) with its closed-form roots filtered for admissibility
ConstantSolutionGate constant_solution_gate(int m);
PolyReal constant_solution_cubic(int m);

// Delta^{r-1} T_2 for alpha = log rho on the flat cone f = rho equals
// coeff * rho^{-2r}; returns the closed-form coefficient
double cylinder_laplacian_power_coefficient(int m, int r);

enum class CylinderProfile { log_rho, rho_sq, rho_sq_log_rho, rho_pow };

// catalog verdict: is the given profile r-harmonic on R^m \ {0} -> cylinder
bool cylinder_harmonicity(CylinderProfile p, int m, int r, int rprime = 2);
Profile cylinder_profile(CylinderProfile p, int m = 0, int rprime = 2);

struct ConformalSweepRow {
	double rho = 0.0;
	double residual = 0.0;
};
struct ConformalSweepReport {
	std::vector<ConformalSweepRow> rows;
	double max_abs_residual = 0.0;
};

// EL residual of r-energy along the conformal profile alpha' = h(alpha)/f,
// grown as a Taylor series of the ODE, sampled on [a,b]
ConformalSweepReport conformal_nonexistence_sweep(const ModelManifold& domain,
                                                  const WarpFunction& target, int r, double alpha0,
                                                  double rho_at_alpha0, double a, double b,
                                                  int n_samples = 50);

// profile defined by the first-order ODE alpha' = h(alpha)/f(rho), jets built
// by Taylor recursion from the right-hand side
Profile conformal_profile(const ModelManifold& domain, const WarpFunction& target, double rho_ref,
                          double alpha_ref);

} // namespace wb
