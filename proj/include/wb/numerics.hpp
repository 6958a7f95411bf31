#pragma once
#include <functional>
#include <stdexcept>
#include <vector>

namespace wb {

struct NumericsError : std::runtime_error {
	using std::runtime_error::runtime_error;
};
struct NonFiniteSample : NumericsError {
	using NumericsError::NumericsError;
};
struct DegreeTooHigh : NumericsError {
	using NumericsError::NumericsError;
};
struct NotSymmetric : NumericsError {
	using NumericsError::NumericsError;
};

enum class QuadKind { gauss_legendre, periodic_trapezoid };

struct Quadrature {
	QuadKind kind = QuadKind::gauss_legendre;
	int n = 16;
};

// Gauss-Legendre nodes/weights on [-1,1], Newton iteration on the Legendre
// recurrence; exact for polynomials of degree <= 2n-1
void gauss_legendre_rule(int n, std::vector<double>& x, std::vector<double>& w);

using ScalarFn = std::function<double(double)>;

// single rule application over [a,b] (periodic kind: uniform nodes, no endpoint
// duplication)
double integrate(const Quadrature& q, const ScalarFn& f, double a, double b);

// composite Gauss-Legendre with panel doubling until two resolutions agree to
// rel_tol (Richardson-style check)
double integrate_adaptive(const ScalarFn& f, double a, double b, double rel_tol = 1e-9,
                          int n_per_panel = 16);

// ---- adaptive Runge-Kutta with blow-up bookkeeping ----

enum class OdeStatus { completed, blow_up, step_underflow };

struct OdeOutcome {
	OdeStatus status = OdeStatus::completed;
	std::vector<std::pair<double, std::vector<double>>> samples;
	double t_escape = 0.0; // first |y|_inf crossing of the escape threshold
};

using VectorField = std::function<std::vector<double>(double, const std::vector<double>&)>;

OdeOutcome rk_integrate(const VectorField& rhs, std::vector<double> y0, double t0, double t1,
                        double rel_tol, double escape);

// ---- low-degree real polynomials ----

struct PolyReal {
	std::vector<double> coeffs; // ascending degree
	int degree() const;
	double eval(double x) const;
	double deriv_eval(double x) const;
};

// all real roots in (lo,hi), degree <= 8, bisection + Newton polish to ~1e-12
std::vector<double> real_roots(const PolyReal& p, double lo, double hi);

// ---- small symmetric eigenproblems (Jacobi rotations, dim <= 4) ----

// row-major square matrix; returns ascending eigenvalues; optionally the
// orthogonal factor Q (columns = eigenvectors) for reconstruction checks
std::vector<double> sym_eigen(const std::vector<double>& M, int dim,
                              std::vector<double>* Q = nullptr);

} // namespace wb
