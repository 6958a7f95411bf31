#pragma once
#include <cmath>

// Dual numbers used as jet coefficient rings.
//
// Dual  : v + e*d with e^2 = 0, one directional derivative.
// Dual2 : v + t*dt + s*ds + t*s*dts with t^2 = s^2 = 0, carries the mixed
//         second derivative d^2/dtds needed for Hessian entries.

namespace wb {

struct Dual {
	double v = 0.0, d = 0.0;
	Dual() = default;
	Dual(double v_) : v(v_) {}
	Dual(double v_, double d_) : v(v_), d(d_) {}
};

inline Dual operator+(const Dual& a, const Dual& b) { return {a.v + b.v, a.d + b.d}; }
inline Dual operator-(const Dual& a, const Dual& b) { return {a.v - b.v, a.d - b.d}; }
inline Dual operator-(const Dual& a) { return {-a.v, -a.d}; }
inline Dual operator*(const Dual& a, const Dual& b) { return {a.v * b.v, a.v * b.d + a.d * b.v}; }
inline Dual operator/(const Dual& a, const Dual& b) {
	return {a.v / b.v, (a.d * b.v - a.v * b.d) / (b.v * b.v)};
}
inline Dual& operator+=(Dual& a, const Dual& b) { a = a + b; return a; }
inline Dual& operator-=(Dual& a, const Dual& b) { a = a - b; return a; }
inline Dual& operator*=(Dual& a, const Dual& b) { a = a * b; return a; }
inline Dual& operator/=(Dual& a, const Dual& b) { a = a / b; return a; }

// f applied through the first-order chain rule
inline Dual dual_apply(const Dual& x, double f0, double f1) { return {f0, f1 * x.d}; }

inline Dual sin(const Dual& x)  { return dual_apply(x, std::sin(x.v),  std::cos(x.v)); }
inline Dual cos(const Dual& x)  { return dual_apply(x, std::cos(x.v), -std::sin(x.v)); }
inline Dual sinh(const Dual& x) { return dual_apply(x, std::sinh(x.v), std::cosh(x.v)); }
inline Dual cosh(const Dual& x) { return dual_apply(x, std::cosh(x.v), std::sinh(x.v)); }
inline Dual exp(const Dual& x)  { double e = std::exp(x.v); return dual_apply(x, e, e); }
inline Dual log(const Dual& x)  { return dual_apply(x, std::log(x.v), 1.0 / x.v); }
inline Dual sqrt(const Dual& x) { double s = std::sqrt(x.v); return dual_apply(x, s, 0.5 / s); }
inline Dual atan(const Dual& x) { return dual_apply(x, std::atan(x.v), 1.0 / (1.0 + x.v * x.v)); }
inline Dual pow(const Dual& x, double a) {
	return dual_apply(x, std::pow(x.v, a), a * std::pow(x.v, a - 1.0));
}

struct Dual2 {
	double v = 0.0, dt = 0.0, ds = 0.0, dts = 0.0;
	Dual2() = default;
	Dual2(double v_) : v(v_) {}
	Dual2(double v_, double dt_, double ds_, double dts_) : v(v_), dt(dt_), ds(ds_), dts(dts_) {}
};

inline Dual2 operator+(const Dual2& a, const Dual2& b) {
	return {a.v + b.v, a.dt + b.dt, a.ds + b.ds, a.dts + b.dts};
}
inline Dual2 operator-(const Dual2& a, const Dual2& b) {
	return {a.v - b.v, a.dt - b.dt, a.ds - b.ds, a.dts - b.dts};
}
inline Dual2 operator-(const Dual2& a) { return {-a.v, -a.dt, -a.ds, -a.dts}; }
inline Dual2 operator*(const Dual2& a, const Dual2& b) {
	return {a.v * b.v,
	        a.v * b.dt + a.dt * b.v,
	        a.v * b.ds + a.ds * b.v,
	        a.v * b.dts + a.dts * b.v + a.dt * b.ds + a.ds * b.dt};
}
// second-order chain rule: f(x) = f0 + f1*(x - v) + (1/2) f2*(x - v)^2 truncated on the tags
inline Dual2 dual2_apply(const Dual2& x, double f0, double f1, double f2) {
	return {f0, f1 * x.dt, f1 * x.ds, f1 * x.dts + f2 * x.dt * x.ds};
}
inline Dual2 operator/(const Dual2& a, const Dual2& b) {
	double iv = 1.0 / b.v;
	return a * dual2_apply(b, iv, -iv * iv, 2.0 * iv * iv * iv);
}
inline Dual2& operator+=(Dual2& a, const Dual2& b) { a = a + b; return a; }
inline Dual2& operator-=(Dual2& a, const Dual2& b) { a = a - b; return a; }
inline Dual2& operator*=(Dual2& a, const Dual2& b) { a = a * b; return a; }
inline Dual2& operator/=(Dual2& a, const Dual2& b) { a = a / b; return a; }

inline Dual2 sin(const Dual2& x)  { double s = std::sin(x.v), c = std::cos(x.v); return dual2_apply(x, s, c, -s); }
inline Dual2 cos(const Dual2& x)  { double s = std::sin(x.v), c = std::cos(x.v); return dual2_apply(x, c, -s, -c); }
inline Dual2 sinh(const Dual2& x) { double s = std::sinh(x.v), c = std::cosh(x.v); return dual2_apply(x, s, c, s); }
inline Dual2 cosh(const Dual2& x) { double s = std::sinh(x.v), c = std::cosh(x.v); return dual2_apply(x, c, s, c); }
inline Dual2 exp(const Dual2& x)  { double e = std::exp(x.v); return dual2_apply(x, e, e, e); }
inline Dual2 log(const Dual2& x)  { double iv = 1.0 / x.v; return dual2_apply(x, std::log(x.v), iv, -iv * iv); }
inline Dual2 sqrt(const Dual2& x) {
	double s = std::sqrt(x.v);
	return dual2_apply(x, s, 0.5 / s, -0.25 / (s * x.v));
}
inline Dual2 atan(const Dual2& x) {
	double q = 1.0 + x.v * x.v;
	return dual2_apply(x, std::atan(x.v), 1.0 / q, -2.0 * x.v / (q * q));
}
inline Dual2 pow(const Dual2& x, double a) {
	return dual2_apply(x, std::pow(x.v, a), a * std::pow(x.v, a - 1.0),
	                   a * (a - 1.0) * std::pow(x.v, a - 2.0));
}

// numeric value under the nilpotent parts, used by domain guards
inline double lead_value(double x) { return x; }
inline double lead_value(const Dual& x) { return x.v; }
inline double lead_value(const Dual2& x) { return x.v; }

} // namespace wb
