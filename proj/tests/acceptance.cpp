// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Symbolic claims are exact (rational arithmetic); numeric claims
// carry the stated tolerances.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>

#include "fgpair/analysis.hpp"
#include "fgpair/catalog.hpp"
#include "fgpair/diagram.hpp"
#include "fgpair/expr.hpp"
#include "fgpair/laplace.hpp"
#include "fgpair/reduce.hpp"
#include "fgpair/transform.hpp"
#include "fgpair/num/commands.hpp"
#include "fgpair/num/stokes.hpp"

using namespace fg;
using namespace fg::num;

namespace {

constexpr double kPi = 3.14159265358979323846;
int g_failures = 0;

void report(int criterion, const char* what, bool pass, const std::string& detail = "") {
  std::printf("[%s] criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", criterion, what,
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

RatFunc rf(const char* s) { return parse_ratfunc(s); }

// ---------------------------------------------------------------- criterion 1
void criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  bool all = true;
  std::string bad;
  for (const char* name : {"JKT1", "JM1", "JM1F", "JM2", "FN", "HTW", "JKT2", "CM2"}) {
    if (!compatibility_residual(catalog(name)).is_zero()) {
      all = false;
      bad += std::string(name) + " ";
    }
  }
  double dt = seconds_since(t0);
  report(1, "zero-curvature residual exactly zero for all eight nondegenerate pairs",
         all && dt < 10.0,
         bad.empty() ? ("exact, " + std::to_string(dt) + " s") : ("nonzero: " + bad));
}

// ---------------------------------------------------------------- criterion 2
void criterion2() {
  bool p1 = eliminate_to_scalar(catalog("JKT1").table, S::y()) == rf("6*y^2 + t");
  bool p2a = eliminate_to_scalar(catalog("JM2").table, S::y()) ==
             rf("2*y^3 + t*y + 1/2 - theta");
  bool p2b = eliminate_to_scalar(catalog("JKT2").table, S::y()) ==
             rf("2*y^3 + t*y + 1/2 - (kappa1 - kappa2)");
  bool p34 = eliminate_to_scalar(catalog("JM2").table, S::z()) ==
             rf("zp^2/(2*z) - 2*z^2 - t*z - theta^2/(2*z)");
  report(2, "scalar eliminations reproduce the first and second Painleve equations and "
            "the auxiliary second-order equation exactly",
         p1 && p2a && p2b && p34);
}

// ---------------------------------------------------------------- criterion 3
void criterion3() {
  bool ok = true;
  std::string bad;
  auto check = [&](const char* what, bool v) {
    if (!v) {
      ok = false;
      bad += std::string(what) + " ";
    }
  };
  check("laplace-JKT1", pair_equal(laplace(catalog("JKT1"), LaplaceDirection::Forward),
                                   catalog("dJKT1")));
  check("laplace-JKT2", pair_equal(laplace(catalog("JKT2"), LaplaceDirection::Forward),
                                   catalog("dJKT2_3")));
  check("laplace-dJKT2_1", pair_equal(laplace(catalog("dJKT2_1"), LaplaceDirection::Forward),
                                      catalog("dJKT2_2")));
  check("fabri-p1",
        pair_equal(apply_transform(catalog("JM1"), named_transform("fabri_p1")), catalog("JM1F")));
  {
    FGPair img = apply_transform(catalog("HTW"), named_transform("fabri_htw_fn"));
    RatFunc::Bindings to_y{{S::z(), rf("yp - y^2 - t/2")}};
    RatFunc::Bindings to_theta{{S::alpha(), rf("1/2 - theta")}};
    check("fabri-htw-fn", pair_equal(img.substituted(to_y), catalog("FN").substituted(to_theta)));
  }
  {
    FGPair img = apply_transform(catalog("CM2"), named_transform("cm2_to_jm2"));
    FGPair want = catalog("JM2")
                      .substituted({{S::theta(), rf("1/2 - alpha")}})
                      .substituted({{S::z(), rf("yp - y^2 - t/2")}});
    check("cm2-to-jm2", pair_equal(img, want));
  }
  {
    auto r = reduce_constraint_row(catalog("dJKT1"), 3);
    TransformSpec post;
    MatrixRat d(2);
    d.at(0, 0) = rf("-4");
    d.at(1, 1) = rf("1");
    post.steps.push_back(Gauge{d});
    check("reduce-dJKT1", pair_equal(apply_transform(r.pair, post), catalog("JM1")));
  }
  check("reduce-dJKT2_1",
        pair_equal(reduce_constraint_row(catalog("dJKT2_1"), 3).pair,
                   catalog("JKT2phi").substituted({{S::kappa1(), rf("theta - 1")}})));
  check("reduce-dJKT2_3",
        pair_equal(reduce_constraint_row(catalog("dJKT2_3"), 3).pair, catalog("dJKT2_3psi")));
  check("reduce-chi",
        pair_equal(reduce_constraint_row(catalog("dJKT2_2chi"), 2).pair, catalog("dJKT2_2psi")));
  {
    TransformSpec g43 = named_transform("u_gauge").then(named_transform("cubic_twist"));
    check("gauges-to-JM2",
          pair_equal(apply_transform(catalog("JKT2phi"), g43),
                     catalog("JM2").substituted({{S::theta(), rf("1 + kappa1")}})));
  }
  {
    FGPair psi = catalog("dJKT2_3psi")
                     .substituted({{S::kappa2(), rf("-1")}, {S::kappa1(), rf("theta - 1")}});
    check("twist-to-HTW",
          pair_equal(apply_transform(psi, named_transform("psi_twist")), catalog("HTW")));
    check("gauge-chi", pair_equal(apply_transform(catalog("dJKT2_2"), named_transform("chi_gauge")),
                                  catalog("dJKT2_2chi")));
    check("gauge-to-HTW",
          pair_equal(apply_transform(catalog("dJKT2_2psi"), named_transform("htw_gauge")),
                     catalog("HTW")));
  }
  report(3, "every Laplace image, Fabri map, gauge, and constraint reduction lands exactly",
         ok, bad);
}

// ---------------------------------------------------------------- criterion 4
void criterion4() {
  FGPair start = catalog("JM2");
  bool commute = diagram_check(figure2_upper_route(), figure2_lower_route(), start);
  bool lands = pair_equal(run_route(figure2_upper_route(), start), catalog("HTW"));
  report(4, "both compositions from the Jimbo-Miwa pair to the Harnad-Tracy-Widom pair "
            "coincide exactly",
         commute && lands);
}

// ---------------------------------------------------------------- criterion 5
void criterion5() {
  MatrixRat i_sigma1(2), shear(2);
  i_sigma1.at(0, 1) = rf("i");
  i_sigma1.at(1, 0) = rf("i");
  shear.at(0, 0) = rf("1");
  shear.at(0, 1) = rf("-zeta");
  shear.at(1, 1) = rf("1");
  bool fn = check_symmetry(catalog("FN"), i_sigma1);
  bool jm1f = check_symmetry(catalog("JM1F"), shear);
  report(5, "reflection symmetries hold exactly for the FN and Fabri-transformed JM1 pairs",
         fn && jm1f);
}

// ---------------------------------------------------------------- criterion 6
void criterion6() {
  Extension g1{S::w(), rf("lambda - y").num()};
  ScalarPair got1 = scalar_reduce(catalog("JM1"), 2, g1);
  ScalarPair want1 = scalar_catalog("G1");
  RatFunc::Bindings b1{{S::yp(), RatFunc::var(S::z())}};
  bool ok1 = got1.potential == want1.potential.substitute(b1) &&
             got1.r1 == want1.r1.substitute(b1) && got1.r0 == want1.r0.substitute(b1);

  Extension g2{S::w(), rf("u*(lambda - y)").num()};
  ScalarPair got2 = scalar_reduce(catalog("JM2"), 1, g2);
  ScalarPair want2 = scalar_catalog("G2");
  RatFunc::Bindings b2{{S::yp(), rf("y^2 + z + t/2")}, {S::alpha(), rf("1/2 - theta")}};
  bool ok2 = got2.potential == want2.potential.substitute(b2) &&
             got2.r1 == want2.r1.substitute(b2) && got2.r0 == want2.r0.substitute(b2);
  report(6, "scalar reductions reproduce both second-order potentials exactly", ok1 && ok2);
}

// ---------------------------------------------------------------- criterion 7
void criterion7() {
  auto run_case = [&](const char* label, C theta, const std::string& branch) {
    auto t0 = std::chrono::steady_clock::now();
    TheoremConfig cfg;
    cfg.theta = theta;
    cfg.branch = branch;
    cfg.mu = {std::polar(1.0, 2 * kPi / 3), std::polar(2.0, 2 * kPi / 3)};
    cfg.arg_mu = {2 * kPi / 3, 2 * kPi / 3};
    P2State st = select_state(cfg);
    TransformOptions opt;
    Theorem31Report r = verify_theorem31(st, cfg.mu[0], cfg.mu[1], cfg.arg_mu[0], opt, 1e-6, 1.4);
    double dt = seconds_since(t0);
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "%s: residual_mu %.2e, residual_t %.2e, doubling %.2e, control %.2e, %.1f s",
                  label, r.residual_mu, r.residual_t, r.r_double_delta, r.negative_control, dt);
    report(7, "integral-transform validation by transfer matrices",
           r.residual_mu <= 1e-6 && r.residual_t <= 1e-6 && r.r_double_delta <= 1e-8 &&
               r.negative_control >= 1e-2 && dt < 120.0,
           buf);
  };
  run_case("theta=1/2 closed branch", C(0.5, 0.0), "yzero");
  run_case("theta=1/4 flow data", C(0.25, 0.0), "flow");
}

// ---------------------------------------------------------------- criterion 8
void criterion8() {
  P2State st1 = y_zero_branch(1.0);
  StokesData d1 = stokes_matrices(st1, 1e-10);
  StokesData d2 = stokes_matrices(y_zero_branch(1.5), 1e-10);
  double drift = 0.0;
  for (int i = 0; i < 6; ++i) drift = std::max(drift, std::abs(d1.s[i] - d2.s[i]));

  StokesData da = stokes_matrices(airy_branch_state(1.0), 1e-10);
  auto oracle = airy_oracle_multipliers(1.0);
  double airy_worst = 0.0;
  for (int i = 0; i < 6; ++i) airy_worst = std::max(airy_worst, std::abs(da.s[i] - oracle[i]));

  char buf[256];
  std::snprintf(buf, sizeof buf,
                "templates %.2e, product %.2e, drift %.2e, airy-oracle %.2e",
                std::max(d1.template_residual, da.template_residual),
                std::max(d1.product_residual, da.product_residual), drift, airy_worst);
  report(8, "Stokes data: templates, monodromy product, isomonodromy drift, Airy oracle",
         d1.template_residual <= 1e-8 && da.template_residual <= 1e-8 &&
             d1.product_residual <= 1e-4 && da.product_residual <= 1e-4 && drift <= 1e-6 &&
             airy_worst <= 1e-6,
         buf);
}

// ---------------------------------------------------------------- criterion 9
struct Gen {
  std::mt19937 rng;
  explicit Gen(unsigned seed) : rng(seed) {}
  GRat coeff() {
    std::uniform_int_distribution<int> d(-3, 3);
    int re = d(rng);
    int im = (rng() % 4 == 0) ? d(rng) : 0;
    return GRat(Rat(re), Rat(im));
  }
  int small() { return int(rng() % 5) - 2; }
  Poly poly(const std::vector<Sym>& syms, int maxterms = 3, int maxdeg = 2) {
    Poly p;
    std::uniform_int_distribution<int> nt(1, maxterms), dg(0, maxdeg);
    int k = nt(rng);
    for (int i = 0; i < k; ++i) {
      Mono m;
      for (Sym s : syms) m.e[s] = uint8_t(dg(rng));
      p.add_term(m, coeff());
    }
    return p;
  }
  RatFunc ratfunc(const std::vector<Sym>& syms) {
    Poly d;
    do {
      d = poly(syms, 2, 1);
    } while (d.is_zero());
    return RatFunc(poly(syms), d);
  }
  RatFunc linear_entry(Sym s) {
    Poly p{GRat(long(small()))};
    Mono m;
    m.e[s] = 1;
    p.add_term(m, GRat(long(small())));
    Mono my;
    my.e[S::y()] = 1;
    p.add_term(my, GRat(long(small())));
    return RatFunc(p);
  }
  MatrixRat mat(int n, Sym s, bool linear) {
    MatrixRat m(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m.at(i, j) = linear ? linear_entry(s) : RatFunc(GRat(long(small())));
    return m;
  }
};

void criterion9() {
  bool ok = true;
  std::string bad;

  {  // ring axioms
    Gen g(11);
    std::vector<Sym> syms = {S::lambda(), S::y(), S::t()};
    for (int i = 0; i < 1000 && ok; ++i) {
      RatFunc a = g.ratfunc(syms), b = g.ratfunc(syms), c = g.ratfunc(syms);
      if (!(a * (b + c) == a * b + a * c && (a + b) + c == a + (b + c) && a * b == b * a)) {
        ok = false;
        bad = "ring axioms";
      }
    }
  }
  if (ok) {  // derivative commutation
    Gen g(22);
    auto table = catalog("JM2").table;
    std::vector<Sym> syms = {S::lambda(), S::y(), S::z(), S::t()};
    for (int i = 0; i < 1000 && ok; ++i) {
      RatFunc f = g.ratfunc(syms);
      if (!(f.diff_spectral(S::lambda()).diff_t(table) ==
            f.diff_t(table).diff_spectral(S::lambda()))) {
        ok = false;
        bad = "derivative commutation";
      }
    }
  }
  if (ok) {  // functoriality + inverse law
    Gen g(33);
    FGPair base = catalog("JM2");
    int done = 0;
    for (int it = 0; done < 1000 && it < 3000 && ok; ++it) {
      MatrixRat upper = MatrixRat::identity(2), lower = MatrixRat::identity(2),
                diag = MatrixRat::identity(2);
      upper.at(0, 1) = g.linear_entry(S::lambda());
      lower.at(1, 0) = g.linear_entry(S::lambda());
      int c = g.small(), d = g.small();
      if (c == 0 || d == 0) continue;
      diag.at(0, 0) = RatFunc(GRat(long(c)));
      diag.at(1, 1) = RatFunc(GRat(long(d)));
      TransformSpec a, b;
      a.steps.push_back(Gauge{upper * lower});
      a.steps.push_back(ExpTwist{rf("lambda*t") * RatFunc(GRat(long(g.small())))});
      b.steps.push_back(Gauge{diag});
      b.steps.push_back(PowerTwist{rf("theta") * RatFunc(GRat(long(g.small())))});
      if (!pair_equal(apply_transform(apply_transform(base, a), b),
                      apply_transform(base, a.then(b))) ||
          !pair_equal(apply_transform(apply_transform(base, a), a.inverse()), base)) {
        ok = false;
        bad = "transform functoriality/inverse";
      }
      ++done;
    }
    if (done < 1000 && ok) {
      ok = false;
      bad = "functoriality sample count";
    }
  }
  if (ok) {  // laplace round-trip
    Gen g(44);
    DerivationTable table;
    table.set(S::y(), rf("y^2 + t"));
    int done = 0;
    for (int it = 0; done < 1000 && it < 4000 && ok; ++it) {
      FGPair p;
      p.name = "rand";
      p.spectral = S::lambda();
      p.table = table;
      p.L = g.mat(2, S::lambda(), true);
      p.R = g.mat(2, S::lambda(), true);
      p.T1 = g.mat(2, S::lambda(), false);
      p.T0 = g.mat(2, S::lambda(), false);
      FGPair fwd, back;
      try {
        fwd = laplace(p, LaplaceDirection::Forward);
        back = laplace(fwd, LaplaceDirection::Inverse);
      } catch (const Error&) {
        continue;
      }
      if (!pair_equal(back, p)) {
        ok = false;
        bad = "laplace round-trip";
      }
      ++done;
    }
    if (done < 1000 && ok) {
      ok = false;
      bad = "laplace sample count";
    }
  }
  report(9, "randomized property suites, 1000 instances each, zero failures", ok, bad);
}

}  // namespace

int main() {
  std::printf("acceptance suite\n");
  auto t0 = std::chrono::steady_clock::now();
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  std::printf("total: %s (%.1f s)\n", g_failures ? "FAIL" : "PASS", seconds_since(t0));
  return g_failures ? 1 : 0;
}
