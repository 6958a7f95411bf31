#pragma once
#include <functional>
#include <vector>

#include "curves.hpp"
#include "geometry.hpp"
#include "jet.hpp"
#include "numerics.hpp"

// Second variation of the curve r-energies at the critical circles.  The
// Hessian diagonalizes over Fourier modes; each mode contributes a small
// symmetric block assembled from dual-dual jet evaluations of the energy
// density, compared against the closed-form block entries where available.

namespace wb {

struct SpectrumProblem {
	SurfaceOfRevolution target;
	int r = 2;
	int k = 1;               // winding: w = k gamma along the critical circle
	double alpha_star = 0.0; // latitude of the critical circle
	bool paraboloid = false;
};

// circles w = k gamma at alpha* = arcsin(1/sqrt r) on the round sphere
SpectrumProblem circle_problem(int r, int k);
// parallels of the paraboloid of revolution at alpha* = 1/(2 sqrt(r-2))
SpectrumProblem paraboloid_problem(int r);

struct ModeField {
	std::function<Jet(double, int)> w, alpha; // components along d/dw, d/dalpha
};

// mixed second derivative of E_r at the critical circle in directions (V, W)
double hessian_pair(const SpectrumProblem& P, const ModeField& V, const ModeField& W, int quad_n);

struct FourierBlock {
	int mode = 0;
	int dim = 0;
	std::vector<double> M;     // dim x dim, row major
	std::vector<double> evals; // ascending
};

// L2-normalized trig basis in the mode: dim 2 at mode 0, dim 4 otherwise
FourierBlock fourier_block(const SpectrumProblem& P, int mode, int quad_n = 0);

struct ClosedFormBlock {
	bool valid = false;
	double A = 0.0, B = 0.0, C = 0.0; // block of the w/alpha cosine pair
	double lambda_minus = 0.0, lambda_plus = 0.0;
	double S0_w = 0.0, S0_a = 0.0; // mode-0 diagonal, when known
	bool S0_valid = false;
};

ClosedFormBlock closed_form_block(const SpectrumProblem& P, int mode);

struct IndexNullity {
	int index = 0;
	int nullity = 0;
	int modes_used = 0;
	bool tail_certified = false; // smallest eigenvalue positive and increasing at the tail
	std::vector<FourierBlock> blocks;
};

IndexNullity index_nullity(const SpectrumProblem& P, int max_mode);

} // namespace wb
