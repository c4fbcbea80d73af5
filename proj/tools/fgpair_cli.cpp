// Command-line front end: symbolic certifications, diagram checks, numeric
// theorem validation, Stokes data, and plain-table exports.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "fgpair/analysis.hpp"
#include "fgpair/catalog.hpp"
#include "fgpair/expr.hpp"
#include "fgpair/laplace.hpp"
#include "fgpair/pairio.hpp"
#include "fgpair/reduce.hpp"
#include "fgpair/transform.hpp"
#include "fgpair/num/commands.hpp"

using namespace fg;
using namespace fg::num;

namespace {

int emit(const Report& rep, const std::string& out_path, bool with_timing) {
  std::string text = rep.serialize(with_timing);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    out << text;
  }
  return rep.all_pass() ? 0 : 1;
}

int emit_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    out << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification workbench for the matrix Fuchs-Garnier pairs of Painleve I/II"};
  app.require_subcommand(1);

  std::string out_path;
  bool with_timing = false;
  double tol = 1e-10;
  app.add_option("--out", out_path, "write the report to a file")->capture_default_str();
  app.add_flag("--timing", with_timing, "include per-check timing in reports");
  app.add_option("--tol", tol, "numeric tolerance")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "compatibility certification of catalog pairs");
  std::vector<std::string> pair_names;
  verify->add_option("--pair", pair_names, "pair name (repeatable); default: all")
      ->expected(-1);

  auto* diagram = app.add_subcommand("diagram", "run every edge of a transformation diagram");
  int figure = 2;
  diagram->add_option("--figure", figure, "diagram index (1 or 2)")->required();

  auto* lap = app.add_subcommand("laplace", "formal Laplace transform of a cataloged pair");
  std::string lap_pair, lap_dir = "forward";
  lap->add_option("--pair", lap_pair)->required();
  lap->add_option("--dir", lap_dir, "forward|inverse");

  auto* tr = app.add_subcommand("transform", "apply a named transform to a cataloged pair");
  std::string tr_pair, tr_spec;
  tr->add_option("--pair", tr_pair)->required();
  tr->add_option("--spec", tr_spec, "one of the named transforms")->required();

  auto* red = app.add_subcommand("reduce", "constraint-row reduction of a degenerate pair");
  std::string red_pair;
  int red_row = 3;
  red->add_option("--pair", red_pair)->required();
  red->add_option("--row", red_row)->required();

  auto* sc = app.add_subcommand("scalar", "second-order scalar reduction of a 2x2 pair");
  std::string sc_pair = "JM1";
  int sc_component = 2;
  sc->add_option("--pair", sc_pair, "JM1 or JM2")->required();
  sc->add_option("--component", sc_component);

  auto* th = app.add_subcommand("theorem31", "numeric validation of the integral transform");
  std::string theta_str = "0.5";
  double t_val = 1.0, t2_val = 1.4, eps = 0.2617993877991494, r_trunc = 6.0, acc_tol = 1e-6;
  std::vector<std::string> mu_strs;
  std::string branch = "auto";
  bool corrupt = false;
  th->add_option("--theta", theta_str)->capture_default_str();
  th->add_option("--t", t_val)->capture_default_str();
  th->add_option("--t2", t2_val, "second flow time for the t-equation transfer")
      ->capture_default_str();
  th->add_option("--mu", mu_strs, "mu value (give two)")->expected(-1);
  th->add_option("--eps", eps)->capture_default_str();
  th->add_option("--rtrunc", r_trunc)->capture_default_str();
  th->add_option("--acc-tol", acc_tol)->capture_default_str();
  th->add_option("--branch", branch, "auto|yzero|airy|flow");
  th->add_flag("--corrupt-kernel", corrupt, "negative control: flip the cubic kernel sign")
      ->group("self-test");

  auto* st = app.add_subcommand("stokes", "Stokes multipliers and monodromy checks");
  std::string st_theta = "0.5", st_branch = "auto";
  double st_t = 1.0, st_t2 = 1.5;
  st->add_option("--theta", st_theta)->capture_default_str();
  st->add_option("--t", st_t)->capture_default_str();
  st->add_option("--t2", st_t2, "second time for the isomonodromy drift")->capture_default_str();
  st->add_option("--branch", st_branch, "auto|yzero|airy|flow");

  auto* pl = app.add_subcommand("plot-export", "contour samples as a plain numeric table");
  std::string pl_theta = "0.5", pl_branch = "auto";
  double pl_t = 1.0, pl_eps = 0.2617993877991494, pl_rtrunc = 6.0;
  pl->add_option("--theta", pl_theta)->capture_default_str();
  pl->add_option("--t", pl_t)->capture_default_str();
  pl->add_option("--eps", pl_eps)->capture_default_str();
  pl->add_option("--rtrunc", pl_rtrunc)->capture_default_str();
  pl->add_option("--branch", pl_branch);

  auto* ce = app.add_subcommand("catalog-export", "write the pair catalog as .pair files");
  std::string ce_dir = "catalog";
  ce->add_option("--dir", ce_dir)->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      auto names = pair_names.empty() ? catalog_names() : pair_names;
      return emit(run_verify(names), out_path, with_timing);
    }
    if (*diagram) return emit(run_diagram(figure), out_path, with_timing);
    if (*lap) {
      auto dir = (lap_dir == "inverse") ? LaplaceDirection::Inverse : LaplaceDirection::Forward;
      return emit_text(serialize_pair(laplace(catalog(lap_pair), dir)), out_path);
    }
    if (*tr) {
      FGPair img = apply_transform(catalog(tr_pair), named_transform(tr_spec));
      return emit_text(serialize_pair(img), out_path);
    }
    if (*red) {
      auto r = reduce_constraint_row(catalog(red_pair), red_row);
      std::ostringstream os;
      os << "# eliminated component " << r.eliminated << "; relation coefficients:";
      for (auto& g : r.relation) os << " " << print_ratfunc(g);
      os << "\n" << serialize_pair(r.pair);
      return emit_text(os.str(), out_path);
    }
    if (*sc) {
      Extension ext{S::w(), sc_pair == "JM2" ? parse_ratfunc("u*(lambda - y)").num()
                                             : parse_ratfunc("lambda - y").num()};
      ScalarPair s = scalar_reduce(catalog(sc_pair), sc_component, ext);
      std::ostringstream os;
      os << "potential: " << print_ratfunc(s.potential) << "\n";
      os << "r1: " << print_ratfunc(s.r1) << "\n";
      os << "r0: " << print_ratfunc(s.r0) << "\n";
      return emit_text(os.str(), out_path);
    }
    if (*th) {
      TheoremConfig cfg;
      cfg.theta = parse_complex(theta_str);
      cfg.t = t_val;
      cfg.t_second = t2_val;
      cfg.eps = eps;
      cfg.r_trunc = r_trunc;
      cfg.tol = tol;
      cfg.acc_tol = acc_tol;
      cfg.branch = branch;
      cfg.corrupt_kernel = corrupt;
      if (mu_strs.empty()) mu_strs = {"exp(2i*pi/3)", "2*exp(2i*pi/3)"};
      for (auto& m : mu_strs) {
        C v = parse_complex(m);
        cfg.mu.push_back(v);
        cfg.arg_mu.push_back(std::arg(v));
      }
      return emit(run_theorem31(cfg), out_path, with_timing);
    }
    if (*st) {
      TheoremConfig cfg;
      cfg.theta = parse_complex(st_theta);
      cfg.t = st_t;
      cfg.tol = tol;
      cfg.branch = st_branch;
      return emit(run_stokes(cfg, st_t2), out_path, with_timing);
    }
    if (*pl) {
      TheoremConfig cfg;
      cfg.theta = parse_complex(pl_theta);
      cfg.t = pl_t;
      cfg.eps = pl_eps;
      cfg.r_trunc = pl_rtrunc;
      cfg.tol = tol;
      cfg.branch = pl_branch;
      return emit_text(plot_export(cfg), out_path);
    }
    if (*ce) {
      for (auto& name : catalog_names())
        save_pair_file(catalog(name), ce_dir + "/" + name + ".pair");
      std::cout << "wrote " << catalog_names().size() << " pair files to " << ce_dir << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
