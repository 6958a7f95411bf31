#pragma once
#include <string>
#include <vector>

#include "equivariant.hpp"

// The minimizing family for the ES-4 energy on the planar annulus into the
// round sphere: cutoff interpolation between the inverse-stereographic angle
// 2 arctan(a rho) and the constant pi, with energies tending to zero along a
// geometric parameter ladder.  This exhibits the failure of the Palais-Smale
// compactness condition for the functional.

namespace wb {

// smooth one-sided ingredient e(x) = exp(-c/x) for x > 0, identically 0
// otherwise
Jet cutoff_bump(double x0, int K, double c = 1.0);

enum class CutoffKind {
	mollified_step, // normalized integral of exp(-3/(4 t(1-t))) on (0,1)
	bump_quotient,  // e(rho-1) / (e(rho-1) + e(2-rho))
};

// transition xi: 0 for rho <= 1, 1 for rho >= 2, strictly increasing between,
// all one-sided derivatives vanishing at the seams
Jet cutoff_xi(double rho0, int K, CutoffKind kind = CutoffKind::mollified_step);

// alpha_a(rho) = 2 arctan(a rho) + xi(rho) (pi - 2 arctan(a rho))
Profile condition_c_profile(double a, CutoffKind kind = CutoffKind::mollified_step);

// 2 pi * integral over [1,2] of the ES-4 density for the annulus-to-sphere map
double es4_family_energy(double a, double rel_tol = 1e-9,
                         CutoffKind kind = CutoffKind::mollified_step);

struct LadderRow {
	double a = 0.0;
	double energy = 0.0;
};

struct LadderReport {
	std::vector<LadderRow> rows;
	double final_energy = 0.0;
	bool monotone = false; // decreasing along the whole ladder
};

// energies along a = 2, 4, ..., 2^max_pow
LadderReport energy_ladder(int max_pow = 16, double rel_tol = 1e-9,
                           CutoffKind kind = CutoffKind::mollified_step);

struct SupBound {
	double sup_abs_sin = 0.0; // sampled sup of |sin alpha_a| on [1,2]
	double bound = 0.0;       // 2a/(1+a^2)
	bool within = false;
};

SupBound sup_sin_bound(double a, int n_samples = 2001, double slack = 1e-12,
                       CutoffKind kind = CutoffKind::mollified_step);

struct InfimumReport {
	double min_energy = 0.0;
	double best_a = 0.0;
	bool attained = false;   // always false: zero energy would force harmonicity
	std::string note;
};

// pairs the decaying ladder with the non-attainment statement; empty input is
// an error
InfimumReport infimum_gap_check(const std::vector<double>& a_list, double rel_tol = 1e-9,
                                CutoffKind kind = CutoffKind::mollified_step);

} // namespace wb
