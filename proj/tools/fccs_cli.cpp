#include <complex>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fccs/adaptive.hpp"
#include "fccs/fem.hpp"
#include "fccs/filon.hpp"
#include "fccs/integrands.hpp"
#include "fccs/rule1d.hpp"
#include "fccs/sparse.hpp"
#include "fccs/tables.hpp"
#include "fccs/uq.hpp"

using json = nlohmann::json;
using fccs::cplx;

namespace {

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json jnum(double v) {
  if (std::isnan(v)) return "nan";
  return v;
}

json jcplx(cplx v) { return json{{"re", jnum(v.real())}, {"im", jnum(v.imag())}}; }

struct Output {
  std::string format = "csv";

  void emit(const json& record, const std::vector<std::string>& columns) const {
    if (format == "json") {
      std::cout << record.dump(2) << "\n";
      return;
    }
    std::string header, row;
    for (const auto& col : columns) {
      if (!header.empty()) {
        header += ",";
        row += ",";
      }
      header += col;
      const json& v = record.at(col);
      if (v.is_number_float())
        row += num(v.get<double>());
      else if (v.is_number_integer())
        row += std::to_string(v.get<long long>());
      else if (v.is_boolean())
        row += v.get<bool>() ? "1" : "0";
      else
        row += v.get<std::string>();
    }
    std::cout << header << "\n" << row << "\n";
  }
};

std::vector<double> parse_vec(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  return out;
}

fccs::Level1Variant parse_variant(const std::string& s) {
  if (s == "midpoint") return fccs::Level1Variant::Midpoint;
  if (s == "cc2") return fccs::Level1Variant::TwoPoint;
  throw CLI::ValidationError("--level1 must be midpoint or cc2");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sparse oscillatory quadrature and 1D Helmholtz expectation toolkit"};
  app.require_subcommand(1);

  Output out;
  int jobs = 1;
  bool expensive = false;
  app.add_option("--format", out.format, "Output format: csv or json")
      ->default_val("csv")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--jobs", jobs, "Parallel workers for table cells")->default_val(1);
  app.add_flag("--expensive", expensive, "Allow the expensive table tier");

  // weights
  auto* wcmd = app.add_subcommand("weights", "Oscillatory moment table W_0..W_N");
  double w_omega = 1.0;
  int w_maxdeg = 16;
  bool w_check = false;
  wcmd->add_option("--omega", w_omega, "Frequency (0 or |omega| >= 1)")->required();
  wcmd->add_option("--max-degree", w_maxdeg, "Largest degree N")->default_val(16);
  wcmd->add_flag("--check-oracle", w_check, "Also report |oracle difference| per entry");

  // quad1d
  auto* qcmd = app.add_subcommand("quad1d", "One-dimensional rule on a builtin function");
  double q_omega = 0.0;
  int q_level = 3;
  std::string q_fn = "one", q_level1 = "midpoint";
  qcmd->add_option("--omega", q_omega, "Frequency")->required();
  qcmd->add_option("--level", q_level, "Grid level (>= 1)")->default_val(3);
  qcmd->add_option("--fn", q_fn, "Function: one, square, expcos, cos2y")->default_val("one");
  qcmd->add_option("--level1", q_level1, "Level-1 rule: midpoint or cc2")
      ->default_val("midpoint");

  // fccs
  auto* fcmd = app.add_subcommand("fccs", "Sparse rule for int f(y) e^{ik a.y} dy");
  double f_k = 1.0, f_m = 2.0, f_x = 0.5;
  std::string f_a, f_fn = "one", f_level1 = "midpoint";
  int f_r = 4, f_ref_r = 0;
  fcmd->add_option("--k", f_k, "Wavenumber")->required();
  fcmd->add_option("--a", f_a, "Comma-separated phase vector")->required();
  fcmd->add_option("--r", f_r, "Maximum level")->default_val(4);
  fcmd->add_option("--fn", f_fn, "Integrand name")->default_val("one");
  fcmd->add_option("--m", f_m, "Integrand modulation parameter")->default_val(2.0);
  fcmd->add_option("--x", f_x, "Spatial point of the field integrand")->default_val(0.5);
  fcmd->add_option("--level1", f_level1, "Level-1 rule: midpoint or cc2")
      ->default_val("midpoint");
  fcmd->add_option("--ref-r", f_ref_r, "Also compute a reference at this level")
      ->default_val(0);

  // adaptive
  auto* acmd = app.add_subcommand("adaptive", "Dimension-adaptive sparse rule");
  double a_k = 1.0, a_tol = 1e-4, a_m = 2.0, a_x = 0.5;
  std::string a_a, a_fn = "one", a_level1 = "midpoint";
  long a_budget = 1000000;
  acmd->add_option("--k", a_k, "Wavenumber")->required();
  acmd->add_option("--a", a_a, "Comma-separated phase vector")->required();
  acmd->add_option("--tol", a_tol, "Profit tolerance")->default_val(1e-4);
  acmd->add_option("--budget", a_budget, "Evaluation budget")->default_val(1000000);
  acmd->add_option("--fn", a_fn, "Integrand name")->default_val("one");
  acmd->add_option("--m", a_m, "Integrand modulation parameter")->default_val(2.0);
  acmd->add_option("--x", a_x, "Spatial point of the field integrand")->default_val(0.5);
  acmd->add_option("--level1", a_level1, "Level-1 rule: midpoint or cc2")
      ->default_val("midpoint");

  // helmholtz
  auto* hcmd = app.add_subcommand("helmholtz", "Asymptotic solve of the 1D Helmholtz problem");
  double h_k = 32.0;
  std::string h_field = "builtin", h_y;
  int h_d = 4, h_M = 1, h_L = 1024, h_MG = 10, h_fem = 0;
  hcmd->add_option("--k", h_k, "Wavenumber")->required();
  hcmd->add_option("--field", h_field, "Refractive family: builtin or constant")
      ->default_val("builtin");
  hcmd->add_option("--d", h_d, "Number of random modes of the builtin field")->default_val(4);
  hcmd->add_option("--y", h_y, "Comma-separated sample of the random modes");
  hcmd->add_option("--M", h_M, "Coarse intervals")->default_val(1);
  hcmd->add_option("--L", h_L, "Fine subintervals per coarse interval")->default_val(1024);
  hcmd->add_option("--MG", h_MG, "Gauss points per fine subinterval")->default_val(10);
  hcmd->add_option("--fem", h_fem, "Also solve with this many finite elements")->default_val(0);

  // uq
  auto* ucmd = app.add_subcommand("uq", "Expectation of the Helmholtz solution at x");
  double u_k = 32.0, u_x = 1.0;
  int u_d = 4;
  std::string u_method = "standard:8", u_field = "builtin";
  ucmd->add_option("--k", u_k, "Wavenumber")->required();
  ucmd->add_option("--d", u_d, "Stochastic dimension")->default_val(4);
  ucmd->add_option("--x", u_x, "Evaluation point (coarse node)")->default_val(1.0);
  ucmd->add_option("--method", u_method, "standard:R or adaptive:TAU")
      ->default_val("standard:8");
  ucmd->add_option("--field", u_field, "builtin or a JSON config path")
      ->default_val("builtin");

  // table
  auto* tcmd = app.add_subcommand("table", "Recompute a reproduction table");
  std::string t_id;
  tcmd->add_option("--id", t_id, "Table id T1..T15")->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*wcmd) {
      const fccs::WeightTable t = w_omega == 0.0 ? fccs::weights_zero(w_maxdeg)
                                                 : fccs::weights_osc(w_omega, w_maxdeg);
      if (out.format == "json") {
        json rows = json::array();
        for (int n = 0; n <= w_maxdeg; ++n) {
          json row{{"n", n}, {"w", jcplx(t.weights[n])}};
          if (w_check)
            row["oracle_diff"] =
                jnum(std::abs(t.weights[n] - fccs::oracle_weight(w_omega, n)));
          rows.push_back(row);
        }
        std::cout << json{{"omega", w_omega}, {"rows", rows}}.dump(2) << "\n";
      } else {
        std::cout << "n,re,im" << (w_check ? ",oracle_diff" : "") << "\n";
        for (int n = 0; n <= w_maxdeg; ++n) {
          std::cout << n << "," << num(t.weights[n].real()) << ","
                    << num(t.weights[n].imag());
          if (w_check)
            std::cout << ","
                      << num(std::abs(t.weights[n] - fccs::oracle_weight(w_omega, n)));
          std::cout << "\n";
        }
      }
      return 0;
    }

    if (*qcmd) {
      const auto g = fccs::make_function1d(q_fn);
      const cplx v = fccs::integrate_1d(g, q_omega, q_level, parse_variant(q_level1));
      json rec{{"value_re", jnum(v.real())}, {"value_im", jnum(v.imag())}};
      std::vector<std::string> cols = {"value_re", "value_im"};
      cplx exact;
      if (fccs::function1d_exact(q_fn, q_omega, &exact)) {
        rec["abs_err"] = jnum(std::abs(v - exact));
        cols.push_back("abs_err");
      }
      out.emit(rec, cols);
      return 0;
    }

    if (*fcmd) {
      const std::vector<double> a = parse_vec(f_a);
      fccs::IntegrandParams prm;
      prm.d = static_cast<int>(a.size());
      prm.m = f_m;
      prm.x = f_x;
      const fccs::Integrand f = fccs::make_integrand(f_fn, prm);
      const auto variant = parse_variant(f_level1);
      const fccs::SparseResult res = fccs::fccs_integrate(f, f_k, a, f_r, variant);
      json rec{{"value_re", jnum(res.value.real())},
               {"value_im", jnum(res.value.imag())},
               {"nodes", static_cast<long long>(res.nodes)}};
      std::vector<std::string> cols = {"value_re", "value_im", "nodes"};
      if (f_ref_r > 0) {
        const cplx ref = fccs::fccs_integrate(f, f_k, a, f_ref_r, variant).value;
        rec["abs_err"] = jnum(std::abs(res.value - ref));
        rec["rel_err"] = jnum(std::abs(res.value - ref) / std::abs(ref));
        cols.push_back("abs_err");
        cols.push_back("rel_err");
      }
      out.emit(rec, cols);
      return 0;
    }

    if (*acmd) {
      const std::vector<double> a = parse_vec(a_a);
      fccs::IntegrandParams prm;
      prm.d = static_cast<int>(a.size());
      prm.m = a_m;
      prm.x = a_x;
      const fccs::Integrand f = fccs::make_integrand(a_fn, prm);
      fccs::AdaptiveOptions opt;
      opt.tol = a_tol;
      opt.budget = a_budget;
      opt.variant = parse_variant(a_level1);
      const fccs::AdaptiveResult res = fccs::adaptive_integrate(f, a_k, a, opt);
      json indices = json::array();
      for (const auto& ix : res.old_set) indices.push_back(ix);
      for (const auto& ix : res.active_set) indices.push_back(ix);
      json rec{{"value_re", jnum(res.value.real())},
               {"value_im", jnum(res.value.imag())},
               {"evals", res.evals},
               {"max_profit", jnum(res.max_profit)},
               {"budget_exhausted", res.budget_exhausted}};
      if (out.format == "json") rec["indices"] = indices;
      out.emit(rec, {"value_re", "value_im", "evals", "max_profit", "budget_exhausted"});
      return 0;
    }

    if (*hcmd) {
      fccs::HelmholtzProblem p;
      p.k = h_k;
      if (h_field == "constant") {
        p.n = fccs::constant_field(1.0);
      } else if (h_field == "builtin") {
        std::vector<double> y = h_y.empty() ? std::vector<double>(h_d, 0.0) : parse_vec(h_y);
        p.n = fccs::sample_field(fccs::builtin_model(static_cast<int>(y.size())), y);
      } else {
        std::cerr << "unknown field: " << h_field << "\n";
        return 2;
      }
      p.F = fccs::linear_source();
      fccs::SpatialMesh mesh;
      mesh.M = h_M;
      mesh.L = h_L;
      mesh.MG = h_MG;
      const fccs::HNASolution sol = fccs::solve_hna(p, mesh);
      const cplx u1 = fccs::assemble_u1(sol, 1.0);
      json rec{{"u1_re", jnum(u1.real())}, {"u1_im", jnum(u1.imag())}};
      std::vector<std::string> cols = {"u1_re", "u1_im"};
      if (h_fem > 0) {
        const fccs::FemResult fr = fccs::fem_solve(p, h_fem);
        const cplx uf = fccs::fem_value(fr, 1.0);
        rec["fem_re"] = jnum(uf.real());
        rec["fem_im"] = jnum(uf.imag());
        rec["diff"] = jnum(std::abs(u1 - uf));
        cols.insert(cols.end(), {"fem_re", "fem_im", "diff"});
      }
      out.emit(rec, cols);
      return 0;
    }

    if (*ucmd) {
      if (u_field != "builtin") {
        std::cerr << "only the builtin field family is configured in this build\n";
        return 2;
      }
      fccs::UQMethod method;
      const auto colon = u_method.find(':');
      const std::string kind = u_method.substr(0, colon);
      const std::string arg = colon == std::string::npos ? "" : u_method.substr(colon + 1);
      if (kind == "standard") {
        method.kind = fccs::UQMethod::Kind::Standard;
        method.r = arg.empty() ? 8 : std::stoi(arg);
      } else if (kind == "adaptive") {
        method.kind = fccs::UQMethod::Kind::Adaptive;
        method.tau = arg.empty() ? 1e-4 : std::stod(arg);
      } else {
        std::cerr << "--method must be standard:R or adaptive:TAU\n";
        return 2;
      }
      const fccs::UQResult res = fccs::expectation_u1(
          u_x, u_k, fccs::builtin_model(u_d), fccs::linear_source(), 1.0, 1.0, method);
      json rec{{"value_re", jnum(res.value.real())},
               {"value_im", jnum(res.value.imag())},
               {"n_mu", res.n_mu},
               {"n_nu", res.n_nu},
               {"n_f", res.n_f},
               {"n_solves", res.n_solves},
               {"budget_exhausted", res.budget_exhausted}};
      if (out.format == "json") {
        rec["part_mu"] = jcplx(res.part_mu);
        rec["part_nu"] = jcplx(res.part_nu);
        rec["part_f"] = jcplx(res.part_f);
      }
      out.emit(rec,
               {"value_re", "value_im", "n_mu", "n_nu", "n_f", "n_solves", "budget_exhausted"});
      return 0;
    }

    if (*tcmd) {
      const fccs::TableReport rep = fccs::run_table(t_id, expensive, jobs);
      if (rep.refused) {
        std::cerr << rep.message << "\n";
        return 2;
      }
      if (out.format == "json") {
        json cells = json::array();
        for (const auto& c : rep.cells) {
          json params;
          for (const auto& kv : c.params) params[kv.first] = kv.second;
          json jc{{"params", params},
                  {"computed", jnum(c.computed)},
                  {"ref_kind", c.ref_kind},
                  {"checked", c.checked},
                  {"pass", c.pass}};
          if (c.has_reference) jc["reference"] = jnum(c.reference);
          cells.push_back(jc);
        }
        std::cout << json{{"id", rep.id},
                          {"title", rep.title},
                          {"pass", rep.pass()},
                          {"cells", cells}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << fccs::table_csv(rep);
      }
      return rep.pass() ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
