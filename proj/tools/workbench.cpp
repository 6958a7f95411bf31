// Command-line surface for the workbench: every experiment as a reproducible
// run with a serialized manifest and machine-readable CSV/JSON output.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "wb/closed_forms.hpp"
#include "wb/condition_c.hpp"
#include "wb/conformal.hpp"
#include "wb/curves.hpp"
#include "wb/equivariant.hpp"
#include "wb/expr.hpp"
#include "wb/geometry.hpp"
#include "wb/jet.hpp"
#include "wb/numerics.hpp"
#include "wb/spectrum.hpp"

using nlohmann::json;

namespace {

constexpr const char* artifact_version = "1";

struct Output {
	std::string command;
	json manifest = json::object();
	std::vector<std::string> columns;
	std::vector<json> rows; // objects keyed by column name
	bool failed = false;    // any row with verdict "fail"

	void add_row(const json& row) {
		rows.push_back(row);
		if (row.contains("verdict") && row["verdict"] == "fail") failed = true;
	}
};

std::string fmt(const json& v) {
	if (v.is_string()) return v.get<std::string>();
	if (v.is_number_float()) {
		char buf[32];
		std::snprintf(buf, sizeof(buf), "%.12g", v.get<double>());
		return buf;
	}
	return v.dump();
}

void write_output(const Output& out, const std::string& path, const std::string& format) {
	std::ostringstream body;
	if (format == "json") {
		json doc;
		doc["manifest"] = out.manifest;
		doc["rows"] = out.rows;
		body << doc.dump(2) << "\n";
	} else {
		for (auto it = out.manifest.begin(); it != out.manifest.end(); ++it)
			body << "# " << it.key() << "=" << fmt(it.value()) << "\n";
		for (size_t i = 0; i < out.columns.size(); i++)
			body << (i ? "," : "") << out.columns[i];
		body << "\n";
		for (const auto& row : out.rows) {
			for (size_t i = 0; i < out.columns.size(); i++) {
				body << (i ? "," : "");
				if (row.contains(out.columns[i])) body << fmt(row[out.columns[i]]);
			}
			body << "\n";
		}
	}
	if (path.empty()) {
		std::cout << body.str();
	} else {
		std::ofstream f(path, std::ios::binary);
		f << body.str();
	}
}

json base_manifest(const std::string& command, double tol, int quad_n) {
	json m;
	m["command"] = command;
	m["tol"] = tol;
	m["quad_n"] = quad_n;
	m["seed"] = 0;
	m["artifact_version"] = artifact_version;
	m["profile_grammar_version"] = wb::profile_grammar_version;
	return m;
}

wb::ModelManifold parse_domain(const std::string& spec) {
	auto colon = spec.find(':');
	if (colon == std::string::npos) throw CLI::ValidationError("--domain", "expected kind:M");
	std::string kind = spec.substr(0, colon);
	int m = std::stoi(spec.substr(colon + 1));
	if (kind == "ball") return {m, wb::WarpFunction::identity(), 0.0, 1e9};
	if (kind == "sphere") return {m, wb::WarpFunction::sin(), 0.0, M_PI};
	if (kind == "hyperbolic") return {m, wb::WarpFunction::sinh(), 0.0, 1e9};
	throw CLI::ValidationError("--domain", "unknown kind " + kind);
}

wb::WarpFunction parse_target(const std::string& spec) {
	if (spec == "sphere") return wb::WarpFunction::sin();
	if (spec == "hyperbolic") return wb::WarpFunction::sinh();
	if (spec == "cylinder") return wb::WarpFunction::constant(1.0);
	throw CLI::ValidationError("--target", "unknown target " + spec);
}

int run_self_test();

} // namespace

int main(int argc, char** argv) {
	CLI::App app{"numerical workbench for higher-order harmonic map criteria"};
	app.require_subcommand(1);

	std::string out_path, format = "csv";
	double tol = 1e-8;
	int quad_n = 0;
	app.add_option("--out", out_path, "output file (default: stdout)");
	app.add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
	app.add_option("--tol", tol, "verification tolerance");
	app.add_option("--quad-n", quad_n, "quadrature points override");

	// verify-hypersphere
	auto* hs = app.add_subcommand("verify-hypersphere", "criticality of constant latitudes");
	int hs_r = 2, hs_m = 3;
	std::string hs_flavor = "r";
	hs->add_option("--r", hs_r)->required();
	hs->add_option("--m", hs_m)->required();
	hs->add_option("--flavor", hs_flavor)->check(CLI::IsMember({"r", "es4"}));

	// clifford
	auto* cl = app.add_subcommand("clifford", "product-torus criticality polynomial");
	int cl_p = 1, cl_q = 1, cl_r = 2;
	bool cl_iso = false;
	cl->add_option("--p", cl_p)->required();
	cl->add_option("--q", cl_q)->required();
	cl->add_option("--r", cl_r)->required();
	cl->add_flag("--isometric", cl_iso);

	// constant-solutions
	auto* cs = app.add_subcommand("constant-solutions", "constant-profile gate over m");
	std::string cs_range = "3..12";
	cs->add_option("--m-range", cs_range);

	// cylinder
	auto* cy = app.add_subcommand("cylinder", "flat-cone-to-cylinder profile catalog");
	int cy_m = 4, cy_r = 2;
	std::string cy_profile = "log";
	cy->add_option("--m", cy_m)->required();
	cy->add_option("--r", cy_r)->required();
	cy->add_option("--profile", cy_profile);

	// el-residual
	auto* el = app.add_subcommand("el-residual", "Euler-Lagrange residual of a profile");
	std::string el_domain = "ball:3", el_target = "sphere", el_flavor = "r", el_profile = "rho";
	int el_r = 2;
	double el_rho = 1.0;
	el->add_option("--domain", el_domain);
	el->add_option("--target", el_target);
	el->add_option("--r", el_r);
	el->add_option("--flavor", el_flavor)->check(CLI::IsMember({"r", "es4"}));
	el->add_option("--profile", el_profile)->required();
	el->add_option("--rho", el_rho)->required();

	// conformal-beta
	auto* cb = app.add_subcommand("conformal-beta", "blow-up scan of the beta equation");
	int cb_m = 8;
	double cb_b0 = 0.0, cb_db0 = 1.0;
	cb->add_option("--m", cb_m)->required();
	cb->add_option("--beta0", cb_b0);
	cb->add_option("--dbeta0", cb_db0);

	// spectrum
	auto* sp = app.add_subcommand("spectrum", "index and nullity of critical circles");
	std::string sp_case = "circle";
	int sp_r = 2, sp_k = 1, sp_mmax = -1;
	sp->add_option("--case", sp_case)->check(CLI::IsMember({"circle", "paraboloid"}));
	sp->add_option("--r", sp_r)->required();
	sp->add_option("--k", sp_k);
	sp->add_option("--mmax", sp_mmax);

	// condition-c
	auto* cc = app.add_subcommand("condition-c", "energy decay of the cutoff family");
	std::string cc_a = "2,4,8,16,32,64,128,256";
	cc->add_option("--a", cc_a, "comma-separated parameter list");

	// self-test
	app.add_subcommand("self-test", "run the module invariant suite");

	// global flags may trail the subcommand arguments
	for (auto* s : app.get_subcommands(nullptr)) s->fallthrough();

	CLI11_PARSE(app, argc, argv);

	Output out;
	try {
		if (hs->parsed()) {
			out.command = "verify-hypersphere";
			out.columns = {"m", "r", "flavor", "rho", "alpha", "residual", "tolerance", "verdict"};
			wb::ReducedProblem P{{hs_m, wb::WarpFunction::constant(1.0), 0.0, 1e9},
			                     wb::WarpFunction::sin(), hs_r,
			                     hs_flavor == "es4" ? wb::Flavor::es4_energy : wb::Flavor::r_energy};
			double astar = wb::hypersphere_critical(hs_r);
			std::vector<double> alphas = {astar, astar - 0.1, astar + 0.1};
			for (double alpha : alphas) {
				auto prof = wb::constant_profile(alpha);
				for (int i = 0; i < 10; i++) {
					double rho = 0.3 + 0.17 * i;
					double res = wb::el_residual(P, prof, rho).residual;
					bool at_star = alpha == astar;
					json row{{"m", hs_m},     {"r", hs_r},       {"flavor", hs_flavor},
					         {"rho", rho},    {"alpha", alpha},  {"residual", res},
					         {"tolerance", tol}};
					row["verdict"] = at_star ? (std::abs(res) < tol ? "ok" : "fail")
					                         : (std::abs(res) > 1e-4 ? "ok" : "fail");
					out.add_row(row);
				}
			}
		} else if (cl->parsed()) {
			out.command = "clifford";
			out.columns = {"p", "q", "r", "kind", "value", "residual", "tolerance", "verdict"};
			auto poly = wb::clifford_polynomial(cl_p, cl_q, cl_r);
			for (size_t i = 0; i < poly.coeffs.size(); i++)
				out.add_row({{"p", cl_p}, {"q", cl_q}, {"r", cl_r},
				             {"kind", "coeff_" + std::to_string(i)}, {"value", poly.coeffs[i]},
				             {"residual", 0.0}, {"tolerance", tol}, {"verdict", "ok"}});
			for (double t : wb::isometric_roots(cl_p, cl_q, cl_r)) {
				double R1 = std::sqrt(t), R2 = std::sqrt(1.0 - t);
				// the root fixes both the radii and the latitude, sin^2 alpha = t
				double back = std::abs(wb::general_clifford_condition(cl_p, cl_q, R1, R2, cl_r,
				                                                      std::asin(R1)));
				double residual = cl_iso ? back : std::abs(poly.eval(t));
				out.add_row({{"p", cl_p}, {"q", cl_q}, {"r", cl_r}, {"kind", "root"},
				             {"value", t}, {"residual", residual}, {"tolerance", tol},
				             {"verdict", residual < std::max(tol, 1e-10) ? "ok" : "fail"}});
			}
		} else if (cs->parsed()) {
			out.command = "constant-solutions";
			out.columns = {"m", "n_roots", "root_x", "alpha", "verdict"};
			auto dots = cs_range.find("..");
			if (dots == std::string::npos)
				throw CLI::ValidationError("--m-range", "expected A..B");
			int a = std::stoi(cs_range.substr(0, dots));
			int b = std::stoi(cs_range.substr(dots + 2));
			for (int m = a; m <= b; m++) {
				auto g = wb::constant_solution_gate(m);
				if (g.roots_x.empty()) {
					out.add_row({{"m", m}, {"n_roots", 0}, {"root_x", ""}, {"alpha", ""},
					             {"verdict", "ok"}});
					continue;
				}
				for (size_t i = 0; i < g.roots_x.size(); i++)
					out.add_row({{"m", m}, {"n_roots", int(g.roots_x.size())},
					             {"root_x", g.roots_x[i]}, {"alpha", g.alpha_values[i]},
					             {"verdict", "ok"}});
			}
		} else if (cy->parsed()) {
			out.command = "cylinder";
			out.columns = {"m", "r", "profile", "catalog_harmonic", "max_abs_residual",
			               "tolerance", "verdict"};
			wb::CylinderProfile kind;
			int rprime = 2;
			if (cy_profile == "log") kind = wb::CylinderProfile::log_rho;
			else if (cy_profile == "sq") kind = wb::CylinderProfile::rho_sq;
			else if (cy_profile == "sqlog") kind = wb::CylinderProfile::rho_sq_log_rho;
			else if (cy_profile.rfind("pow:", 0) == 0) {
				kind = wb::CylinderProfile::rho_pow;
				rprime = std::stoi(cy_profile.substr(4));
			} else
				throw CLI::ValidationError("--profile", "expected log|sq|sqlog|pow:K");
			bool expect = wb::cylinder_harmonicity(kind, cy_m, cy_r, rprime);
			wb::ReducedProblem P{{cy_m, wb::WarpFunction::identity(), 0.0, 1e9},
			                     wb::WarpFunction::constant(1.0), cy_r, wb::Flavor::r_energy};
			auto prof = wb::cylinder_profile(kind, cy_m, rprime);
			double worst = 0.0;
			// sampled away from the cone tip, where high-order jets of the
			// catalog profiles are well conditioned
			for (int i = 0; i < 20; i++)
				worst = std::max(worst,
				                 std::abs(wb::el_residual(P, prof, 2.0 + 0.1 * i).residual));
			bool numeric = worst < std::max(tol, 1e-9);
			out.add_row({{"m", cy_m}, {"r", cy_r}, {"profile", cy_profile},
			             {"catalog_harmonic", expect}, {"max_abs_residual", worst},
			             {"tolerance", tol},
			             {"verdict", numeric == expect ? "ok" : "fail"}});
		} else if (el->parsed()) {
			out.command = "el-residual";
			out.columns = {"rho", "residual", "part", "part_value", "input_jet_order",
			               "tolerance", "verdict"};
			wb::ReducedProblem P{parse_domain(el_domain), parse_target(el_target), el_r,
			                     el_flavor == "es4" ? wb::Flavor::es4_energy
			                                        : wb::Flavor::r_energy};
			auto prof = wb::parse_profile(el_profile);
			auto rep = wb::el_residual(P, prof, el_rho);
			for (const auto& [name, value] : rep.residual_parts)
				out.add_row({{"rho", rep.rho0}, {"residual", rep.residual}, {"part", name},
				             {"part_value", value}, {"input_jet_order", rep.input_jet_order},
				             {"tolerance", tol}, {"verdict", "ok"}});
		} else if (cb->parsed()) {
			out.command = "conformal-beta";
			out.columns = {"m", "direction", "status", "t_escape", "tolerance", "verdict"};
			for (int dir : {+1, -1}) {
				auto o = wb::beta_blowup_scan(cb_m, cb_b0, cb_db0, dir * 0.999, 1e-10);
				std::string status = o.status == wb::OdeStatus::blow_up ? "blow_up"
				                     : o.status == wb::OdeStatus::completed ? "completed"
				                                                            : "step_underflow";
				out.add_row({{"m", cb_m}, {"direction", dir}, {"status", status},
				             {"t_escape", o.t_escape}, {"tolerance", tol},
				             {"verdict", "ok"}});
			}
		} else if (sp->parsed()) {
			out.command = "spectrum";
			out.columns = {"case", "r", "k", "mode", "eigenvalues", "index", "nullity",
			               "tail_certified", "verdict"};
			wb::SpectrumProblem P = sp_case == "circle" ? wb::circle_problem(sp_r, sp_k)
			                                            : wb::paraboloid_problem(sp_r);
			int mmax = sp_mmax > 0 ? sp_mmax : 2 * sp_k + 6;
			auto res = wb::index_nullity(P, mmax);
			for (const auto& B : res.blocks) {
				std::ostringstream ev;
				for (size_t i = 0; i < B.evals.size(); i++) {
					char buf[32];
					std::snprintf(buf, sizeof(buf), "%.9g", B.evals[i]);
					ev << (i ? " " : "") << buf;
				}
				out.add_row({{"case", sp_case}, {"r", sp_r}, {"k", sp_k}, {"mode", B.mode},
				             {"eigenvalues", ev.str()}, {"index", res.index},
				             {"nullity", res.nullity},
				             {"tail_certified", res.tail_certified},
				             {"verdict", res.tail_certified ? "ok" : "fail"}});
			}
		} else if (cc->parsed()) {
			out.command = "condition-c";
			out.columns = {"a", "energy", "sup_abs_sin", "sup_bound", "tolerance", "verdict"};
			std::stringstream ss(cc_a);
			std::string tok;
			double prev = 1e300;
			while (std::getline(ss, tok, ',')) {
				double a = std::stod(tok);
				double e = wb::es4_family_energy(a);
				auto sb = wb::sup_sin_bound(a);
				out.add_row({{"a", a}, {"energy", e}, {"sup_abs_sin", sb.sup_abs_sin},
				             {"sup_bound", sb.bound}, {"tolerance", tol},
				             {"verdict", (e < prev && sb.within) ? "ok" : "fail"}});
				prev = e;
			}
		} else {
			return run_self_test();
		}
	} catch (const std::exception& e) {
		std::cerr << "error command=" << out.command << " what=\"" << e.what() << "\"\n";
		return 2;
	}

	out.manifest = base_manifest(out.command, tol, quad_n);
	write_output(out, out_path, format);
	return out.failed ? 1 : 0;
}

namespace {

int run_self_test() {
	int failures = 0;
	auto check = [&](const char* name, bool ok) {
		std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
		if (!ok) failures++;
	};
	try {
		// jets: product rule against a hand derivative
		{
			auto x = wb::jet_var<double>(0.7, 6);
			auto lhs = wb::derivative(sin(x) * exp(x));
			auto rhs = wb::fit(cos(x) * exp(x) + sin(x) * exp(x), 5);
			double worst = 0.0;
			for (int i = 0; i <= 5; i++) worst = std::max(worst, std::abs(lhs.c[i] - rhs.c[i]));
			check("jet product rule", worst < 1e-12);
		}
		// quadrature: exact on a degree-9 polynomial
		{
			wb::Quadrature q{wb::QuadKind::gauss_legendre, 8};
			double v = wb::integrate(q, [](double x) { return std::pow(x, 9) + x * x; }, 0.0, 1.0);
			check("gauss rule", std::abs(v - (0.1 + 1.0 / 3.0)) < 1e-13);
		}
		// eigen: reconstruct a 3x3
		{
			std::vector<double> M{2, 1, 0, 1, 3, 1, 0, 1, 4};
			std::vector<double> Q;
			auto ev = wb::sym_eigen(M, 3, &Q);
			double tr = ev[0] + ev[1] + ev[2];
			check("jacobi trace", std::abs(tr - 9.0) < 1e-10);
		}
		// hypersphere critical latitude
		{
			wb::ReducedProblem P{{3, wb::WarpFunction::constant(1.0), 0.0, 1e9},
			                     wb::WarpFunction::sin(), 3, wb::Flavor::r_energy};
			double res = wb::el_residual(P, wb::constant_profile(wb::hypersphere_critical(3)), 1.0)
			                 .residual;
			check("hypersphere criticality", std::abs(res) < 1e-10);
		}
		// conformal two forms agree
		{
			wb::ConformalFactor cf{wb::parse_profile("0.3*sin(rho)+0.1*rho"), +1, 5};
			double a = wb::hat_tau4_radial(cf, 1.1), b = wb::hat_tau4_via_field(cf, 1.1);
			check("conformal forms", std::abs(a - b) < 1e-8 * std::max(1.0, std::abs(a)));
		}
		// spectrum first circle eigenvalues
		{
			auto B = wb::fourier_block(wb::circle_problem(2, 1), 1);
			check("circle block", std::abs(B.evals.front()) < 1e-7 &&
			                          std::abs(B.evals.back() - 6.0) < 1e-7);
		}
	} catch (const std::exception& e) {
		std::cerr << "error command=self-test what=\"" << e.what() << "\"\n";
		return 1;
	}
	std::cout << (failures ? "self-test: FAIL\n" : "self-test: ok\n");
	return failures ? 1 : 0;
}

} // namespace
