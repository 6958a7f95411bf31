#include "wb/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "wb/parallel.hpp"

namespace wb {

SpectrumProblem circle_problem(int r, int k) {
	SpectrumProblem P;
	P.target = {WarpFunction::sin(), WarpFunction::constant(1.0), 0.0, M_PI};
	P.r = r;
	P.k = k;
	P.alpha_star = std::asin(1.0 / std::sqrt(double(r)));
	return P;
}

SpectrumProblem paraboloid_problem(int r) {
	if (r < 3) throw NumericsError("paraboloid parallels need r >= 3");
	SpectrumProblem P;
	P.target = {WarpFunction::identity(), WarpFunction::sqrt_one_plus_4sq(), 0.0, 1e9};
	P.r = r;
	P.k = 1;
	P.alpha_star = 0.5 / std::sqrt(double(r - 2));
	P.paraboloid = true;
	return P;
}

namespace {

BasicJet<Dual2> blend(const Jet& base, const Jet& t_dir, const Jet& s_dir) {
	BasicJet<Dual2> out;
	out.base = base.base;
	out.c.resize(base.c.size());
	for (size_t i = 0; i < base.c.size(); i++)
		out.c[i] = Dual2{base.c[i], t_dir.c[i], s_dir.c[i], 0.0};
	return out;
}

Jet zero_jet(double g0, int K) { return jet_const(0.0, g0, K); }

} // namespace

double hessian_pair(const SpectrumProblem& P, const ModeField& V, const ModeField& W, int quad_n) {
	const int K = P.r;
	Quadrature q{QuadKind::periodic_trapezoid, quad_n};
	auto f = [&](double g) {
		Jet wb_ = jet_var<double>(g, K) * double(P.k);
		Jet ab_ = jet_const(P.alpha_star, g, K);
		CurvePair<Dual2> c{blend(wb_, V.w(g, K), W.w(g, K)), blend(ab_, V.alpha(g, K), W.alpha(g, K))};
		return detail::curve_energy_density(P.target, c, P.r).dts;
	};
	return integrate(q, f, 0.0, 2.0 * M_PI);
}

FourierBlock fourier_block(const SpectrumProblem& P, int mode, int quad_n) {
	if (quad_n <= 0) quad_n = std::max(32, 4 * mode + 8);
	double fs = P.target.f.value(P.alpha_star);
	double hs = P.target.h.value(P.alpha_star);
	double cw = 1.0 / (fs * std::sqrt(M_PI));
	double ca = 1.0 / (hs * std::sqrt(M_PI));
	FourierBlock B;
	B.mode = mode;
	std::vector<ModeField> basis;
	if (mode == 0) {
		cw /= std::sqrt(2.0);
		ca /= std::sqrt(2.0);
		basis.push_back({[cw](double g, int K) { return jet_const(cw, g, K); },
		                 [](double g, int K) { return zero_jet(g, K); }});
		basis.push_back({[](double g, int K) { return zero_jet(g, K); },
		                 [ca](double g, int K) { return jet_const(ca, g, K); }});
	} else {
		auto cosj = [mode](double g, int K) { return cos(jet_var<double>(g, K) * double(mode)); };
		auto sinj = [mode](double g, int K) { return sin(jet_var<double>(g, K) * double(mode)); };
		auto zero = [](double g, int K) { return zero_jet(g, K); };
		basis.push_back({[=](double g, int K) { return cosj(g, K) * cw; }, zero});
		basis.push_back({[=](double g, int K) { return sinj(g, K) * cw; }, zero});
		basis.push_back({zero, [=](double g, int K) { return cosj(g, K) * ca; }});
		basis.push_back({zero, [=](double g, int K) { return sinj(g, K) * ca; }});
	}
	B.dim = int(basis.size());
	B.M.assign(B.dim * B.dim, 0.0);
	for (int i = 0; i < B.dim; i++)
		for (int j = i; j < B.dim; j++) {
			double v = hessian_pair(P, basis[i], basis[j], quad_n);
			B.M[i * B.dim + j] = v;
			B.M[j * B.dim + i] = v;
		}
	B.evals = sym_eigen(B.M, B.dim);
	return B;
}

ClosedFormBlock closed_form_block(const SpectrumProblem& P, int mode) {
	ClosedFormBlock out;
	double m = mode, k = P.k;
	double m2 = m * m, m4 = m2 * m2, m6 = m4 * m2, m8 = m4 * m4;
	double k2 = k * k, k4 = k2 * k2, k6 = k4 * k2, k8 = k4 * k4;
	if (!P.paraboloid) {
		if (mode == 0) {
			if (P.r == 2) {
				out.S0_w = 0.0;
				out.S0_a = -k4;
				out.S0_valid = true;
			}
			return out;
		}
		switch (P.r) {
			case 2:
				out.A = m2 * (3 * k2 + m2);
				out.B = m4 + 2 * m2 * k2 - k4;
				out.C = 2.0 * std::sqrt(2.0) * k * m2 * m;
				out.valid = true;
				break;
			case 3:
				out.A = m2 * (20 * k4 + 30 * m2 * k2 + 3 * m4) / 3.0;
				out.B = (-8 * k6 + 21 * m2 * k4 + 84 * m4 * k2 + 9 * m6) / 9.0;
				out.C = std::sqrt(2.0 / 3.0) * k * m2 * m * (35 * k2 + 18 * m2) / 3.0;
				out.valid = true;
				break;
			case 4:
				out.A = m2 * (189 * k6 + 630 * m2 * k4 + 336 * m4 * k2 + 16 * m6) / 16.0;
				out.B = (-54 * k8 + 171 * m2 * k6 + 2020 * m4 * k4 + 1312 * m6 * k2 + 64 * m8) / 64.0;
				out.C = std::sqrt(3.0) * k * m2 * m * (399 * k4 + 644 * m2 * k2 + 128 * m4) / 32.0;
				out.valid = true;
				break;
			default: break;
		}
	} else {
		if (mode == 0) return out;
		switch (P.r) {
			case 3:
				// entries in the metric-orthonormal basis; a basis whose
				// alpha-leg has norm 1/sqrt(2) would halve B and divide C by sqrt(2)
				out.A = 0.25 * m2 * (15 + 30 * m2 + 4 * m4);
				out.B = (-2 + 21 * m2 + 112 * m4 + 16 * m6) / 16.0;
				out.C = std::sqrt(2.0) * m2 * m * (35 + 24 * m2) / 8.0;
				out.valid = true;
				break;
			case 4:
				out.A = m2 * (224 + 840 * m2 + 504 * m4 + 27 * m6) / 27.0;
				out.B = (-64 + 456 * m2 + 6060 * m4 + 4428 * m6 + 243 * m8) / 243.0;
				out.C = 2.0 * std::sqrt(2.0 / 3.0) * m2 * m * (266 + 483 * m2 + 108 * m4) / 27.0;
				out.valid = true;
				break;
			default: break;
		}
	}
	if (out.valid) {
		double mean = 0.5 * (out.A + out.B), half = 0.5 * (out.A - out.B);
		double rad = std::sqrt(half * half + out.C * out.C);
		out.lambda_minus = mean - rad;
		out.lambda_plus = mean + rad;
	}
	return out;
}

IndexNullity index_nullity(const SpectrumProblem& P, int max_mode) {
	IndexNullity out;
	out.modes_used = max_mode;
	out.blocks.resize(max_mode + 1);
	parallel_for(max_mode + 1, [&](int mode) { out.blocks[mode] = fourier_block(P, mode); });
	for (const auto& B : out.blocks) {
		double scale = 1.0;
		for (double ev : B.evals) scale = std::max(scale, std::abs(ev));
		double tol = 1e-6 * scale;
		for (double ev : B.evals) {
			if (ev < -tol)
				out.index++;
			else if (ev <= tol)
				out.nullity++;
		}
	}
	// tail certificate: the per-mode minimum eigenvalue is positive and strictly
	// increasing over the last three modes
	if (max_mode >= 3) {
		double prev = -1e300;
		out.tail_certified = true;
		for (int mode = max_mode - 2; mode <= max_mode; mode++) {
			double mn = out.blocks[mode].evals.front();
			if (!(mn > 0.0 && mn > prev)) out.tail_certified = false;
			prev = mn;
		}
	}
	return out;
}

} // namespace wb
