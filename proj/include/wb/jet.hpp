#pragma once
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dual.hpp"

// Truncated Taylor jets over a scalar ring S (double, Dual, Dual2).
//
// A jet stores the normalized coefficients c[i] = f^(i)(base)/i! of a scalar
// function expanded at `base`, up to a runtime order K.  Arithmetic between
// jets with different base points or orders is a hard error; deliberate
// truncation goes through fit() or the lax:: helpers.

namespace wb {

struct JetError : std::runtime_error {
	using std::runtime_error::runtime_error;
};
struct MismatchedJets : JetError {
	using JetError::JetError;
};
struct OrderTooLow : JetError {
	using JetError::JetError;
};
struct DivisionByZeroLeadCoefficient : JetError {
	using JetError::JetError;
};
struct JetDomainError : JetError {
	using JetError::JetError;
};

template <class S>
struct BasicJet {
	double base = 0.0;
	std::vector<S> c; // c[i] = f^(i)(base)/i!

	BasicJet() : c(1, S(0.0)) {}
	BasicJet(double base_, std::vector<S> coeffs) : base(base_), c(std::move(coeffs)) {
		if (c.empty()) throw JetError("jet needs at least one coefficient");
	}

	int order() const { return int(c.size()) - 1; }
	const S& lead() const { return c[0]; }
};

using Jet = BasicJet<double>;
using TanJet = BasicJet<Dual>;   // value + one tangent direction per coefficient
using HessJet = BasicJet<Dual2>; // two-tag bidual coefficients

// value/tangent pair view of a TanJet
struct TangentJet {
	Jet value, tangent;
};

template <class S>
void check_match(const BasicJet<S>& a, const BasicJet<S>& b) {
	if (a.base != b.base)
		throw MismatchedJets("jets expanded at different base points");
	if (a.order() != b.order())
		throw MismatchedJets("jets of different order");
}

template <class S>
BasicJet<S> jet_const(const S& v, double base, int K) {
	if (K < 0) throw JetError("negative jet order");
	std::vector<S> c(K + 1, S(0.0));
	c[0] = v;
	return {base, std::move(c)};
}

template <class S = double>
BasicJet<S> jet_var(double x0, int K) {
	if (K < 1) throw JetError("jet_var needs order >= 1");
	std::vector<S> c(K + 1, S(0.0));
	c[0] = S(x0);
	c[1] = S(1.0);
	return {x0, std::move(c)};
}

template <class S>
BasicJet<S> operator+(const BasicJet<S>& a, const BasicJet<S>& b) {
	check_match(a, b);
	BasicJet<S> r = a;
	for (size_t i = 0; i < r.c.size(); i++) r.c[i] += b.c[i];
	return r;
}
template <class S>
BasicJet<S> operator-(const BasicJet<S>& a, const BasicJet<S>& b) {
	check_match(a, b);
	BasicJet<S> r = a;
	for (size_t i = 0; i < r.c.size(); i++) r.c[i] -= b.c[i];
	return r;
}
template <class S>
BasicJet<S> operator-(const BasicJet<S>& a) {
	BasicJet<S> r = a;
	for (auto& x : r.c) x = -x;
	return r;
}
template <class S>
BasicJet<S> operator*(const BasicJet<S>& a, const BasicJet<S>& b) {
	check_match(a, b);
	int K = a.order();
	BasicJet<S> r = jet_const(S(0.0), a.base, K);
	for (int i = 0; i <= K; i++)
		for (int j = 0; i + j <= K; j++) r.c[i + j] += a.c[i] * b.c[j];
	return r;
}
template <class S>
BasicJet<S> operator/(const BasicJet<S>& a, const BasicJet<S>& b) {
	check_match(a, b);
	if (lead_value(b.c[0]) == 0.0)
		throw DivisionByZeroLeadCoefficient("jet division by zero lead coefficient");
	int K = a.order();
	BasicJet<S> q = jet_const(S(0.0), a.base, K);
	for (int k = 0; k <= K; k++) {
		S acc = a.c[k];
		for (int j = 0; j < k; j++) acc -= q.c[j] * b.c[k - j];
		q.c[k] = acc / b.c[0];
	}
	return q;
}

// scalar mixing (scalar treated as a constant jet at the same base)
template <class S, class T>
BasicJet<S> operator*(const BasicJet<S>& a, const T& s) {
	BasicJet<S> r = a;
	for (auto& x : r.c) x *= S(s);
	return r;
}
template <class S, class T>
BasicJet<S> operator*(const T& s, const BasicJet<S>& a) {
	return a * s;
}
template <class S, class T>
BasicJet<S> operator/(const BasicJet<S>& a, const T& s) {
	BasicJet<S> r = a;
	for (auto& x : r.c) x /= S(s);
	return r;
}
template <class S, class T>
BasicJet<S> operator+(const BasicJet<S>& a, const T& s) {
	BasicJet<S> r = a;
	r.c[0] += S(s);
	return r;
}
template <class S, class T>
BasicJet<S> operator+(const T& s, const BasicJet<S>& a) {
	return a + s;
}
template <class S, class T>
BasicJet<S> operator-(const BasicJet<S>& a, const T& s) {
	BasicJet<S> r = a;
	r.c[0] -= S(s);
	return r;
}
template <class S, class T>
BasicJet<S> operator-(const T& s, const BasicJet<S>& a) {
	return -(a - s);
}

// explicit truncation; refuses to extend
template <class S>
BasicJet<S> fit(const BasicJet<S>& a, int K) {
	if (K > a.order()) throw OrderTooLow("cannot extend a jet by truncation");
	if (K < 0) throw JetError("negative jet order");
	BasicJet<S> r = a;
	r.c.resize(K + 1);
	return r;
}

template <class S>
BasicJet<S> derivative(const BasicJet<S>& a) {
	if (a.order() < 1) throw OrderTooLow("derivative of an order-0 jet");
	BasicJet<S> r = jet_const(S(0.0), a.base, a.order() - 1);
	for (int i = 0; i < a.order(); i++) r.c[i] = a.c[i + 1] * double(i + 1);
	return r;
}

template <class S>
BasicJet<S> antiderivative(const BasicJet<S>& a, const S& c0) {
	BasicJet<S> r = jet_const(S(0.0), a.base, a.order() + 1);
	r.c[0] = c0;
	for (int i = 0; i <= a.order(); i++) r.c[i + 1] = a.c[i] / double(i + 1);
	return r;
}

// i! * c[i] = the i-th derivative of the represented function at the base point
template <class S>
S total_derivative(const BasicJet<S>& a, int i) {
	if (i < 0) throw JetError("negative derivative order");
	if (i > a.order()) throw OrderTooLow("jet order too low for requested derivative");
	double f = 1.0;
	for (int j = 2; j <= i; j++) f *= j;
	return a.c[i] * f;
}

// polynomial evaluation of the truncated expansion at x
template <class S>
S jet_eval(const BasicJet<S>& a, double x) {
	S r = S(0.0);
	double dx = x - a.base;
	for (int i = a.order(); i >= 0; i--) r = r * S(dx) + a.c[i];
	return r;
}

// outer(inner): outer expanded at the lead value of inner
template <class S>
BasicJet<S> compose(const BasicJet<S>& outer, const BasicJet<S>& inner) {
	if (std::abs(lead_value(inner.c[0]) - outer.base) > 1e-12 * (1.0 + std::abs(outer.base)))
		throw MismatchedJets("composition: inner lead does not match outer base point");
	int K = inner.order();
	BasicJet<S> t = inner;
	t.c[0] -= S(outer.base);
	BasicJet<S> r = jet_const(S(0.0), inner.base, K);
	int n = std::min(outer.order(), K);
	for (int i = n; i >= 0; i--) r = r * t + outer.c[i];
	return r;
}

// ---- elementary functions (D-finite recurrences on normalized coefficients) ----

template <class S>
BasicJet<S> exp(const BasicJet<S>& u) {
	using std::exp;
	int K = u.order();
	BasicJet<S> g = jet_const(S(0.0), u.base, K);
	g.c[0] = exp(u.c[0]);
	for (int k = 1; k <= K; k++) {
		S acc = S(0.0);
		for (int j = 1; j <= k; j++) acc += u.c[j] * g.c[k - j] * double(j);
		g.c[k] = acc / double(k);
	}
	return g;
}

template <class S>
BasicJet<S> log(const BasicJet<S>& u) {
	using std::log;
	if (lead_value(u.c[0]) <= 0.0) throw JetDomainError("log of non-positive lead");
	int K = u.order();
	BasicJet<S> g = jet_const(S(0.0), u.base, K);
	g.c[0] = log(u.c[0]);
	for (int k = 1; k <= K; k++) {
		S acc = u.c[k] * double(k);
		for (int j = 1; j < k; j++) acc -= g.c[j] * u.c[k - j] * double(j);
		g.c[k] = acc / (u.c[0] * double(k));
	}
	return g;
}

template <class S>
BasicJet<S> sqrt(const BasicJet<S>& u) {
	using std::sqrt;
	if (lead_value(u.c[0]) <= 0.0) throw JetDomainError("sqrt of non-positive lead");
	int K = u.order();
	BasicJet<S> g = jet_const(S(0.0), u.base, K);
	g.c[0] = sqrt(u.c[0]);
	for (int k = 1; k <= K; k++) {
		S acc = u.c[k];
		for (int j = 1; j < k; j++) acc -= g.c[j] * g.c[k - j];
		g.c[k] = acc / (g.c[0] * 2.0);
	}
	return g;
}

template <class S>
BasicJet<S> pow(const BasicJet<S>& u, double a) {
	using std::pow;
	if (lead_value(u.c[0]) <= 0.0) throw JetDomainError("pow with non-positive lead");
	int K = u.order();
	BasicJet<S> g = jet_const(S(0.0), u.base, K);
	g.c[0] = pow(u.c[0], a);
	for (int k = 1; k <= K; k++) {
		S acc = S(0.0);
		for (int j = 1; j <= k; j++) acc += u.c[j] * g.c[k - j] * ((a + 1.0) * j - k);
		g.c[k] = acc / (u.c[0] * double(k));
	}
	return g;
}

// integer power by repeated multiplication; no domain restriction
template <class S>
BasicJet<S> ipow(const BasicJet<S>& u, int n) {
	if (n < 0) return jet_const(S(1.0), u.base, u.order()) / ipow(u, -n);
	BasicJet<S> r = jet_const(S(1.0), u.base, u.order());
	for (int i = 0; i < n; i++) r = r * u;
	return r;
}

template <class S>
std::pair<BasicJet<S>, BasicJet<S>> sincos(const BasicJet<S>& u) {
	using std::cos;
	using std::sin;
	int K = u.order();
	BasicJet<S> s = jet_const(S(0.0), u.base, K), c = jet_const(S(0.0), u.base, K);
	s.c[0] = sin(u.c[0]);
	c.c[0] = cos(u.c[0]);
	for (int k = 1; k <= K; k++) {
		S as = S(0.0), ac = S(0.0);
		for (int j = 1; j <= k; j++) {
			as += u.c[j] * c.c[k - j] * double(j);
			ac += u.c[j] * s.c[k - j] * double(j);
		}
		s.c[k] = as / double(k);
		c.c[k] = -ac / double(k);
	}
	return {s, c};
}
template <class S>
BasicJet<S> sin(const BasicJet<S>& u) {
	return sincos(u).first;
}
template <class S>
BasicJet<S> cos(const BasicJet<S>& u) {
	return sincos(u).second;
}

template <class S>
std::pair<BasicJet<S>, BasicJet<S>> sinhcosh(const BasicJet<S>& u) {
	using std::cosh;
	using std::sinh;
	int K = u.order();
	BasicJet<S> s = jet_const(S(0.0), u.base, K), c = jet_const(S(0.0), u.base, K);
	s.c[0] = sinh(u.c[0]);
	c.c[0] = cosh(u.c[0]);
	for (int k = 1; k <= K; k++) {
		S as = S(0.0), ac = S(0.0);
		for (int j = 1; j <= k; j++) {
			as += u.c[j] * c.c[k - j] * double(j);
			ac += u.c[j] * s.c[k - j] * double(j);
		}
		s.c[k] = as / double(k);
		c.c[k] = ac / double(k);
	}
	return {s, c};
}
template <class S>
BasicJet<S> sinh(const BasicJet<S>& u) {
	return sinhcosh(u).first;
}
template <class S>
BasicJet<S> cosh(const BasicJet<S>& u) {
	return sinhcosh(u).second;
}

template <class S>
BasicJet<S> tan(const BasicJet<S>& u) {
	auto [s, c] = sincos(u);
	if (std::abs(lead_value(c.c[0])) < 1e-14) throw JetDomainError("tan at a pole");
	return s / c;
}

template <class S>
BasicJet<S> atan(const BasicJet<S>& u) {
	using std::atan;
	if (u.order() == 0) {
		S a0 = atan(u.c[0]);
		return jet_const(a0, u.base, 0);
	}
	// g' = u'/(1+u^2), integrated with g(base) = atan(u0)
	BasicJet<S> q = jet_const(S(1.0), u.base, u.order() - 1) + fit(u * u, u.order() - 1);
	BasicJet<S> gp = derivative(u) / q;
	return antiderivative(gp, atan(u.c[0]));
}

// lax arithmetic: deliberate truncation to the shorter operand
namespace lax {

template <class S>
int minord(const BasicJet<S>& a, const BasicJet<S>& b) {
	return std::min(a.order(), b.order());
}
template <class S>
BasicJet<S> add(const BasicJet<S>& a, const BasicJet<S>& b) {
	int K = minord(a, b);
	return fit(a, K) + fit(b, K);
}
template <class S>
BasicJet<S> sub(const BasicJet<S>& a, const BasicJet<S>& b) {
	int K = minord(a, b);
	return fit(a, K) - fit(b, K);
}
template <class S>
BasicJet<S> mul(const BasicJet<S>& a, const BasicJet<S>& b) {
	int K = minord(a, b);
	return fit(a, K) * fit(b, K);
}
template <class S>
BasicJet<S> div(const BasicJet<S>& a, const BasicJet<S>& b) {
	int K = minord(a, b);
	return fit(a, K) / fit(b, K);
}

} // namespace lax

// TanJet plumbing: pack a value jet with a tangent seed, unpack the result
inline TanJet tangent_input(const Jet& value, const Jet& tangent) {
	check_match(value, tangent);
	TanJet r = jet_const(Dual(0.0), value.base, value.order());
	for (size_t i = 0; i < r.c.size(); i++) r.c[i] = Dual(value.c[i], tangent.c[i]);
	return r;
}
inline TangentJet split_tangent(const TanJet& t) {
	Jet v = jet_const(0.0, t.base, t.order()), d = v;
	for (size_t i = 0; i < t.c.size(); i++) {
		v.c[i] = t.c[i].v;
		d.c[i] = t.c[i].d;
	}
	return {v, d};
}

} // namespace wb
