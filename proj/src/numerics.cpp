#include "wb/numerics.hpp"

#include <algorithm>
#include <cmath>

namespace wb {

void gauss_legendre_rule(int n, std::vector<double>& x, std::vector<double>& w) {
	if (n < 2) throw NumericsError("quadrature needs n >= 2");
	x.assign(n, 0.0);
	w.assign(n, 0.0);
	for (int i = 0; i < (n + 1) / 2; i++) {
		// Chebyshev-like initial guess, then Newton on P_n
		double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
		double pp = 0.0;
		for (int it = 0; it < 100; it++) {
			double p0 = 1.0, p1 = 0.0;
			for (int j = 0; j < n; j++) {
				double p2 = p1;
				p1 = p0;
				p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
			}
			pp = n * (z * p0 - p1) / (z * z - 1.0);
			double dz = p0 / pp;
			z -= dz;
			if (std::abs(dz) < 1e-15) break;
		}
		x[i] = -z;
		x[n - 1 - i] = z;
		w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
	}
}

double integrate(const Quadrature& q, const ScalarFn& f, double a, double b) {
	if (q.n < 2) throw NumericsError("quadrature needs n >= 2");
	double acc = 0.0;
	if (q.kind == QuadKind::periodic_trapezoid) {
		double h = (b - a) / q.n;
		for (int i = 0; i < q.n; i++) {
			double v = f(a + i * h);
			if (!std::isfinite(v)) throw NonFiniteSample("non-finite integrand sample");
			acc += v;
		}
		return acc * h;
	}
	std::vector<double> x, w;
	gauss_legendre_rule(q.n, x, w);
	double mid = 0.5 * (a + b), half = 0.5 * (b - a);
	for (int i = 0; i < q.n; i++) {
		double v = f(mid + half * x[i]);
		if (!std::isfinite(v)) throw NonFiniteSample("non-finite integrand sample");
		acc += w[i] * v;
	}
	return acc * half;
}

static double composite_gauss(const ScalarFn& f, double a, double b, int panels, int n) {
	Quadrature q{QuadKind::gauss_legendre, n};
	double acc = 0.0, h = (b - a) / panels;
	for (int p = 0; p < panels; p++) acc += integrate(q, f, a + p * h, a + (p + 1) * h);
	return acc;
}

double integrate_adaptive(const ScalarFn& f, double a, double b, double rel_tol, int n_per_panel) {
	double prev = composite_gauss(f, a, b, 1, n_per_panel);
	for (int panels = 2; panels <= 1024; panels *= 2) {
		double cur = composite_gauss(f, a, b, panels, n_per_panel);
		double scale = std::max({1e-300, std::abs(cur), std::abs(prev)});
		if (std::abs(cur - prev) <= rel_tol * scale) return cur;
		prev = cur;
	}
	return prev;
}

// ---- Dormand-Prince 5(4) ----

OdeOutcome rk_integrate(const VectorField& rhs, std::vector<double> y, double t0, double t1,
                        double rel_tol, double escape) {
	if (rel_tol <= 1e-14 || rel_tol >= 1e-2) throw NumericsError("rel_tol out of range");
	static const double c2 = 1. / 5, c3 = 3. / 10, c4 = 4. / 5, c5 = 8. / 9;
	static const double a21 = 1. / 5;
	static const double a31 = 3. / 40, a32 = 9. / 40;
	static const double a41 = 44. / 45, a42 = -56. / 15, a43 = 32. / 9;
	static const double a51 = 19372. / 6561, a52 = -25360. / 2187, a53 = 64448. / 6561,
	                    a54 = -212. / 729;
	static const double a61 = 9017. / 3168, a62 = -355. / 33, a63 = 46732. / 5247,
	                    a64 = 49. / 176, a65 = -5103. / 18656;
	static const double b1 = 35. / 384, b3 = 500. / 1113, b4 = 125. / 192, b5 = -2187. / 6784,
	                    b6 = 11. / 84;
	static const double e1 = 71. / 57600, e3 = -71. / 16695, e4 = 71. / 1920, e5 = -17253. / 339200,
	                    e6 = 22. / 525, e7 = -1. / 40;

	const size_t n = y.size();
	auto norm = [&](const std::vector<double>& v) {
		double m = 0.0;
		for (double x : v) m = std::max(m, std::abs(x));
		return m;
	};
	auto finite = [&](const std::vector<double>& v) {
		for (double x : v)
			if (!std::isfinite(x)) return false;
		return true;
	};

	OdeOutcome out;
	double t = t0, dir = (t1 >= t0) ? 1.0 : -1.0, span = std::abs(t1 - t0);
	double h = dir * span / 100.0;
	bool crossed = false;
	out.samples.push_back({t, y});
	std::vector<double> k1 = rhs(t, y);
	auto axpy = [&](const std::vector<double>& base, std::initializer_list<std::pair<double, const std::vector<double>*>> terms, double hh) {
		std::vector<double> r = base;
		for (auto& [a, k] : terms)
			for (size_t i = 0; i < n; i++) r[i] += hh * a * (*k)[i];
		return r;
	};

	int guard = 0;
	while (dir * (t1 - t) > 1e-15 * span && ++guard < 2000000) {
		if (dir * (t + h - t1) > 0) h = t1 - t;
		std::vector<double> k2 = rhs(t + c2 * h, axpy(y, {{a21, &k1}}, h));
		std::vector<double> k3 = rhs(t + c3 * h, axpy(y, {{a31, &k1}, {a32, &k2}}, h));
		std::vector<double> k4 = rhs(t + c4 * h, axpy(y, {{a41, &k1}, {a42, &k2}, {a43, &k3}}, h));
		std::vector<double> k5 =
		    rhs(t + c5 * h, axpy(y, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}, h));
		std::vector<double> k6 = rhs(
		    t + h, axpy(y, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}, h));
		std::vector<double> y5 =
		    axpy(y, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}}, h);
		std::vector<double> k7 = rhs(t + h, y5);

		double err = 0.0;
		bool ok = finite(y5) && finite(k7);
		if (ok) {
			for (size_t i = 0; i < n; i++) {
				double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
				                e7 * k7[i]);
				double sc = rel_tol * std::max(1.0, std::max(std::abs(y[i]), std::abs(y5[i])));
				err = std::max(err, std::abs(e) / sc);
			}
		} else {
			err = 1e30;
		}

		if (err <= 1.0) {
			t += h;
			y = y5;
			k1 = k7;
			out.samples.push_back({t, y});
			if (!crossed && (!finite(y) || norm(y) > escape)) {
				crossed = true;
				out.t_escape = t;
			}
		}
		double fac = ok ? std::clamp(0.9 * std::pow(std::max(err, 1e-10), -0.2), 0.1, 5.0) : 0.1;
		h *= fac;
		if (std::abs(h) < 1e-12 * span) {
			out.status = crossed ? OdeStatus::blow_up : OdeStatus::step_underflow;
			return out;
		}
	}
	out.status = OdeStatus::completed;
	return out;
}

// ---- polynomials ----

int PolyReal::degree() const {
	int d = int(coeffs.size()) - 1;
	while (d > 0 && std::abs(coeffs[d]) < 1e-14) d--;
	return d;
}
double PolyReal::eval(double x) const {
	double r = 0.0;
	for (int i = int(coeffs.size()) - 1; i >= 0; i--) r = r * x + coeffs[i];
	return r;
}
double PolyReal::deriv_eval(double x) const {
	double r = 0.0;
	for (int i = int(coeffs.size()) - 1; i >= 1; i--) r = r * x + i * coeffs[i];
	return r;
}

std::vector<double> real_roots(const PolyReal& p, double lo, double hi) {
	if (p.degree() > 8) throw DegreeTooHigh("real_roots handles degree <= 8");
	const int N = 4096;
	std::vector<double> roots;
	auto polish = [&](double a, double b) {
		double fa = p.eval(a);
		for (int it = 0; it < 200; it++) {
			double m = 0.5 * (a + b), fm = p.eval(m);
			if (fm == 0.0) { a = b = m; break; }
			if ((fa < 0) != (fm < 0)) b = m;
			else { a = m; fa = fm; }
			if (b - a < 1e-14 * std::max(1.0, std::abs(m))) break;
		}
		double x = 0.5 * (a + b);
		for (int it = 0; it < 8; it++) {
			double d = p.deriv_eval(x);
			if (d == 0.0) break;
			double step = p.eval(x) / d;
			x -= step;
			if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(x))) break;
		}
		return x;
	};
	double h = (hi - lo) / N;
	double prev = p.eval(lo + 0.5 * h * 1e-9); // nudge off the endpoint
	double prevx = lo;
	for (int i = 1; i <= N; i++) {
		double x = lo + i * h, fx = p.eval(x);
		if (prev == 0.0) roots.push_back(prevx);
		else if ((prev < 0) != (fx < 0)) roots.push_back(polish(prevx, x));
		prev = fx;
		prevx = x;
	}
	std::sort(roots.begin(), roots.end());
	// collapse multiplicities / duplicated brackets: candidates closer than the
	// flat zone of a multiple root are one cluster, reported at its median
	std::vector<double> out;
	size_t i = 0;
	while (i < roots.size()) {
		size_t j = i;
		// the flat zone of a multiplicity-k root spans about eps^(1/k)
		while (j + 1 < roots.size() && roots[j + 1] - roots[j] < 2e-5) j++;
		double r = 0.0;
		for (size_t k = i; k <= j; k++) r += roots[k];
		r /= double(j - i + 1);
		if (r > lo && r < hi) out.push_back(r);
		i = j + 1;
	}
	return out;
}

// ---- Jacobi eigensolver ----

std::vector<double> sym_eigen(const std::vector<double>& M, int dim, std::vector<double>* Qout) {
	if (dim < 1 || dim > 4 || int(M.size()) != dim * dim)
		throw NumericsError("sym_eigen expects a square matrix of dim <= 4");
	double scale = 0.0, asym = 0.0;
	for (int i = 0; i < dim; i++)
		for (int j = 0; j < dim; j++) {
			scale = std::max(scale, std::abs(M[i * dim + j]));
			asym = std::max(asym, std::abs(M[i * dim + j] - M[j * dim + i]));
		}
	if (scale > 0 && asym > 1e-9 * scale) throw NotSymmetric("matrix is not symmetric");

	std::vector<double> a = M, q(dim * dim, 0.0);
	for (int i = 0; i < dim; i++) q[i * dim + i] = 1.0;
	for (int sweep = 0; sweep < 100; sweep++) {
		double off = 0.0;
		for (int i = 0; i < dim; i++)
			for (int j = i + 1; j < dim; j++) off += a[i * dim + j] * a[i * dim + j];
		if (off < 1e-26 * std::max(1.0, scale * scale)) break;
		for (int p = 0; p < dim; p++)
			for (int r = p + 1; r < dim; r++) {
				double apr = a[p * dim + r];
				if (std::abs(apr) < 1e-300) continue;
				double theta = (a[r * dim + r] - a[p * dim + p]) / (2.0 * apr);
				double tsign = theta >= 0 ? 1.0 : -1.0;
				double tt = tsign / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
				double cc = 1.0 / std::sqrt(tt * tt + 1.0), ss = tt * cc;
				for (int k = 0; k < dim; k++) {
					double akp = a[k * dim + p], akr = a[k * dim + r];
					a[k * dim + p] = cc * akp - ss * akr;
					a[k * dim + r] = ss * akp + cc * akr;
				}
				for (int k = 0; k < dim; k++) {
					double apk = a[p * dim + k], ark = a[r * dim + k];
					a[p * dim + k] = cc * apk - ss * ark;
					a[r * dim + k] = ss * apk + cc * ark;
				}
				for (int k = 0; k < dim; k++) {
					double qkp = q[k * dim + p], qkr = q[k * dim + r];
					q[k * dim + p] = cc * qkp - ss * qkr;
					q[k * dim + r] = ss * qkp + cc * qkr;
				}
			}
	}
	std::vector<int> idx(dim);
	for (int i = 0; i < dim; i++) idx[i] = i;
	std::sort(idx.begin(), idx.end(),
	          [&](int i, int j) { return a[i * dim + i] < a[j * dim + j]; });
	std::vector<double> ev(dim);
	for (int i = 0; i < dim; i++) ev[i] = a[idx[i] * dim + idx[i]];
	if (Qout) {
		Qout->assign(dim * dim, 0.0);
		for (int i = 0; i < dim; i++)
			for (int k = 0; k < dim; k++) (*Qout)[k * dim + i] = q[k * dim + idx[i]];
	}
	return ev;
}

} // namespace wb
