#include "wb/expr.hpp"

#include <cctype>
#include <cmath>
#include <memory>

namespace wb {

namespace {

struct Node {
	virtual ~Node() = default;
	virtual Jet eval(const Jet& rho) const = 0;
};
using NodePtr = std::shared_ptr<Node>;

struct ConstNode : Node {
	double v;
	explicit ConstNode(double x) : v(x) {}
	Jet eval(const Jet& rho) const override { return jet_const(v, rho.base, rho.order()); }
};

struct VarNode : Node {
	Jet eval(const Jet& rho) const override { return rho; }
};

struct BinNode : Node {
	char op;
	NodePtr a, b;
	BinNode(char o, NodePtr x, NodePtr y) : op(o), a(std::move(x)), b(std::move(y)) {}
	Jet eval(const Jet& rho) const override {
		Jet u = a->eval(rho), v = b->eval(rho);
		switch (op) {
			case '+': return u + v;
			case '-': return u - v;
			case '*': return u * v;
			default: return u / v;
		}
	}
};

struct NegNode : Node {
	NodePtr a;
	explicit NegNode(NodePtr x) : a(std::move(x)) {}
	Jet eval(const Jet& rho) const override { return a->eval(rho) * -1.0; }
};

struct PowNode : Node {
	NodePtr a;
	double e;
	PowNode(NodePtr x, double ex) : a(std::move(x)), e(ex) {}
	Jet eval(const Jet& rho) const override {
		Jet u = a->eval(rho);
		if (e == std::floor(e) && std::abs(e) < 64) return ipow(u, int(e));
		return pow(u, e);
	}
};

struct FnNode : Node {
	std::string name;
	NodePtr a;
	FnNode(std::string n, NodePtr x) : name(std::move(n)), a(std::move(x)) {}
	Jet eval(const Jet& rho) const override {
		Jet u = a->eval(rho);
		if (name == "sin") return sin(u);
		if (name == "cos") return cos(u);
		if (name == "tan") return tan(u);
		if (name == "sinh") return sinhcosh(u).first;
		if (name == "cosh") return sinhcosh(u).second;
		if (name == "exp") return exp(u);
		if (name == "log") return log(u);
		if (name == "sqrt") return sqrt(u);
		if (name == "atan") return atan(u);
		throw ExprParseError("unknown function: " + name);
	}
};

struct Parser {
	const std::string& s;
	size_t i = 0;
	explicit Parser(const std::string& text) : s(text) {}

	void skip() {
		while (i < s.size() && std::isspace((unsigned char)s[i])) i++;
	}
	bool eat(char c) {
		skip();
		if (i < s.size() && s[i] == c) {
			i++;
			return true;
		}
		return false;
	}
	[[noreturn]] void fail(const std::string& msg) {
		throw ExprParseError(msg + " at position " + std::to_string(i));
	}

	double number() {
		skip();
		size_t end = 0;
		double v;
		try {
			v = std::stod(s.substr(i), &end);
		} catch (...) {
			fail("expected a number");
		}
		i += end;
		return v;
	}

	NodePtr expr() {
		NodePtr n = term();
		for (;;) {
			if (eat('+'))
				n = std::make_shared<BinNode>('+', n, term());
			else if (eat('-'))
				n = std::make_shared<BinNode>('-', n, term());
			else
				return n;
		}
	}
	NodePtr term() {
		NodePtr n = factor();
		for (;;) {
			if (eat('*'))
				n = std::make_shared<BinNode>('*', n, factor());
			else if (eat('/'))
				n = std::make_shared<BinNode>('/', n, factor());
			else
				return n;
		}
	}
	NodePtr factor() {
		NodePtr n = unary();
		if (eat('^')) {
			bool neg = eat('-');
			double e = number();
			return std::make_shared<PowNode>(n, neg ? -e : e);
		}
		return n;
	}
	NodePtr unary() {
		if (eat('-')) return std::make_shared<NegNode>(unary());
		if (eat('+')) return unary();
		return primary();
	}
	NodePtr primary() {
		skip();
		if (i >= s.size()) fail("unexpected end of expression");
		char c = s[i];
		if (std::isdigit((unsigned char)c) || c == '.') return std::make_shared<ConstNode>(number());
		if (c == '(') {
			i++;
			NodePtr n = expr();
			if (!eat(')')) fail("expected ')'");
			return n;
		}
		if (std::isalpha((unsigned char)c)) {
			size_t j = i;
			while (j < s.size() && std::isalpha((unsigned char)s[j])) j++;
			std::string name = s.substr(i, j - i);
			i = j;
			if (name == "rho") return std::make_shared<VarNode>();
			if (name == "pi") return std::make_shared<ConstNode>(M_PI);
			static const char* fns[] = {"sin", "cos",  "tan",  "sinh", "cosh",
			                            "exp", "log",  "sqrt", "atan"};
			bool known = false;
			for (const char* f : fns) known |= name == f;
			if (!known) fail("unknown function: " + name);
			if (!eat('(')) fail("expected '(' after " + name);
			NodePtr arg = expr();
			if (!eat(')')) fail("expected ')'");
			return std::make_shared<FnNode>(name, arg);
		}
		fail("unexpected character");
	}
};

} // namespace

Profile parse_profile(const std::string& text) {
	Parser p(text);
	NodePtr root = p.expr();
	p.skip();
	if (p.i != text.size()) p.fail("trailing input");
	Profile out;
	out.description = text;
	out.eval = [root](double rho0, int K) {
		return fit(root->eval(jet_var<double>(rho0, std::max(K, 1))), K);
	};
	return out;
}

} // namespace wb
