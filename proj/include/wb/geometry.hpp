#pragma once
#include <functional>
#include <string>

#include "jet.hpp"

// Warped-product model manifolds M_f = S^{m-1} x I with metric f^2(rho) g_S +
// drho^2, surfaces of revolution f^2(alpha) dw^2 + h^2(alpha) dalpha^2, and the
// radial operators every reduction uses.  The spherical factor g_S is never
// materialized: everything below is scalar jet calculus in the radial variable.

namespace wb {

struct GeometryError : JetError {
	using JetError::JetError;
};

enum class WarpKind { identity, sin_k, sinh_k, cosh_k, constant, sqrt_one_plus_4sq, custom };

struct WarpFunction {
	WarpKind kind = WarpKind::identity;
	double cval = 1.0; // constant kind
	// custom warps must supply exact jets; finite differences are refused
	std::function<Jet(double, int)> custom_jet;

	static WarpFunction identity() { return {WarpKind::identity}; }
	static WarpFunction sin() { return {WarpKind::sin_k}; }
	static WarpFunction sinh() { return {WarpKind::sinh_k}; }
	static WarpFunction cosh() { return {WarpKind::cosh_k}; }
	static WarpFunction constant(double c) { return {WarpKind::constant, c}; }
	static WarpFunction sqrt_one_plus_4sq() { return {WarpKind::sqrt_one_plus_4sq}; }
	static WarpFunction custom(std::function<Jet(double, int)> j) {
		WarpFunction w;
		w.kind = WarpKind::custom;
		w.custom_jet = std::move(j);
		return w;
	}

	bool is_constant() const { return kind == WarpKind::constant; }

	// jet of the warp as a function of its own variable
	Jet eval(double x0, int K) const {
		switch (kind) {
			case WarpKind::custom: return fit(custom_jet(x0, K), K);
			default: break;
		}
		if (K == 0) return jet_const(value(x0), x0, 0);
		return apply(jet_var<double>(x0, K));
	}
	double value(double x) const { return eval0(x); }

	// composition with a jet argument (chain rule through the jet ring)
	template <class S>
	BasicJet<S> apply(const BasicJet<S>& x) const {
		switch (kind) {
			case WarpKind::identity: return x;
			case WarpKind::sin_k: return wb::sin(x);
			case WarpKind::sinh_k: return wb::sinh(x);
			case WarpKind::cosh_k: return wb::cosh(x);
			case WarpKind::constant: return jet_const(S(cval), x.base, x.order());
			case WarpKind::sqrt_one_plus_4sq: return wb::sqrt(jet_const(S(1.0), x.base, x.order()) + x * x * 4.0);
			case WarpKind::custom: return compose_custom(x, 0);
		}
		throw GeometryError("bad warp kind");
	}
	// first derivative of the warp, composed with the argument
	template <class S>
	BasicJet<S> apply_d(const BasicJet<S>& x) const {
		switch (kind) {
			case WarpKind::identity: return jet_const(S(1.0), x.base, x.order());
			case WarpKind::sin_k: return wb::cos(x);
			case WarpKind::sinh_k: return wb::cosh(x);
			case WarpKind::cosh_k: return wb::sinh(x);
			case WarpKind::constant: return jet_const(S(0.0), x.base, x.order());
			case WarpKind::sqrt_one_plus_4sq: return x * 4.0 / apply(x);
			case WarpKind::custom: return compose_custom(x, 1);
		}
		throw GeometryError("bad warp kind");
	}
	// second derivative, composed
	template <class S>
	BasicJet<S> apply_dd(const BasicJet<S>& x) const {
		switch (kind) {
			case WarpKind::identity: return jet_const(S(0.0), x.base, x.order());
			case WarpKind::sin_k: return wb::sin(x) * -1.0;
			case WarpKind::sinh_k: return wb::sinh(x);
			case WarpKind::cosh_k: return wb::cosh(x);
			case WarpKind::constant: return jet_const(S(0.0), x.base, x.order());
			case WarpKind::sqrt_one_plus_4sq: {
				auto h = apply(x);
				return jet_const(S(4.0), x.base, x.order()) / (h * h * h);
			}
			case WarpKind::custom: return compose_custom(x, 2);
		}
		throw GeometryError("bad warp kind");
	}

private:
	double eval0(double x) const {
		switch (kind) {
			case WarpKind::identity: return x;
			case WarpKind::sin_k: return std::sin(x);
			case WarpKind::sinh_k: return std::sinh(x);
			case WarpKind::cosh_k: return std::cosh(x);
			case WarpKind::constant: return cval;
			case WarpKind::sqrt_one_plus_4sq: return std::sqrt(1.0 + 4.0 * x * x);
			case WarpKind::custom: return custom_jet(x, 0).c[0];
		}
		throw GeometryError("bad warp kind");
	}
	template <class S>
	BasicJet<S> compose_custom(const BasicJet<S>& x, int nder) const {
		if constexpr (std::is_same_v<S, double>) {
			Jet outer = custom_jet(x.c[0], x.order() + nder);
			for (int i = 0; i < nder; i++) outer = derivative(outer);
			return compose(outer, x);
		} else {
			throw GeometryError("custom warps are only jet-evaluable over double scalars");
		}
	}
};

struct ModelManifold {
	int m = 2; // dimension of S^{m-1} x I
	WarpFunction f;
	double lo = 0.0, hi = 1.0; // open interval I
	bool contains(double rho) const { return rho > lo && rho < hi; }
};

struct SurfaceOfRevolution {
	WarpFunction f, h; // metric f^2(alpha) dw^2 + h^2(alpha) dalpha^2
	double lo = 0.0, hi = 1.0;
};

// +1 for sin targets, -1 for sinh, 0 for flat (constant h)
struct SpaceFormSign {
	int eps = 0;
	static SpaceFormSign of(const WarpFunction& h) {
		switch (h.kind) {
			case WarpKind::sin_k: return {+1};
			case WarpKind::sinh_k: return {-1};
			case WarpKind::constant: return {0};
			default: throw GeometryError("not a space-form warp");
		}
	}
};

// Christoffel data of M_f at a radial jet: Gamma^m_{ij} = -f f' (g_S)_{ij} and
// Gamma^j_{im} = (f'/f) delta^j_i; only the two scalar jets are stored
struct ChristoffelModel {
	Jet minus_f_fprime;
	Jet fprime_over_f;
};
ChristoffelModel christoffel_model(const ModelManifold& M, const Jet& rho);

// nonzero symbols of a surface of revolution at a profile jet
struct ChristoffelSurface {
	Jet g112; // f'/f
	Jet g211; // -f f'/h^2
	Jet g222; // h'/h
};
ChristoffelSurface christoffel_surface(const SurfaceOfRevolution& S, const Jet& alpha);

// L(F) = -[F'' + (m-1)(f'/f)F' - (m-1) F h'(alpha)^2 / f^2]; the rough
// Laplacian on radial vector fields specialized by the target warp
Jet radial_laplacian(const ModelManifold& M, const WarpFunction& h_target, const Jet& alpha,
                     const Jet& F);

// div(F d/drho) = F' + (m-1)(f'/f) F
Jet radial_divergence(const ModelManifold& M, const Jet& F);

} // namespace wb
