#include "fgpair/diagram.hpp"

#include "fgpair/analysis.hpp"
#include "fgpair/catalog.hpp"
#include "fgpair/expr.hpp"
#include "fgpair/laplace.hpp"
#include "fgpair/reduce.hpp"
#include "fgpair/transform.hpp"

namespace fg {

namespace {

RatFunc::Bindings theta_bindings() {
  return {{S::kappa2(), parse_ratfunc("-1")}, {S::kappa1(), parse_ratfunc("theta - 1")}};
}

MatrixRat diag2(const char* a, const char* d) {
  MatrixRat m(2);
  m.at(0, 0) = parse_ratfunc(a);
  m.at(1, 1) = parse_ratfunc(d);
  return m;
}

TransformSpec gauge_43() {
  return named_transform("u_gauge").then(named_transform("cubic_twist"));
}

void require_equal(const FGPair& a, const FGPair& b, const char* what) {
  if (!pair_equal(a, b)) throw Error(Err::BadTransform, std::string("route mismatch: ") + what);
}

}  // namespace

FGPair run_route(const Route& route, FGPair start) {
  for (auto& op : route) start = op(start);
  return start;
}

bool diagram_check(const Route& a, const Route& b, const FGPair& start) {
  try {
    return pair_equal(run_route(a, start), run_route(b, start));
  } catch (const Error&) {
    return false;
  }
}

Route figure2_upper_route() {
  return {
      // JM2 -> phi-system (invert the u-gauge and cubic twist)
      [](const FGPair& p) { return apply_transform(p, gauge_43().inverse()); },
      // phi-system == 2x2 block of JKT2 at kappa2=-1, kappa1=theta-1; embed
      [](const FGPair& p) {
        FGPair jkt2 = catalog("JKT2").substituted(theta_bindings());
        require_equal(p, block_restrict(jkt2, 2), "phi-system vs JKT2 block");
        return jkt2;
      },
      [](const FGPair& p) { return laplace(p, LaplaceDirection::Forward); },
      [](const FGPair& p) { return reduce_constraint_row(p, 3).pair; },
      [](const FGPair& p) { return apply_transform(p, named_transform("psi_twist")); },
  };
}

Route figure2_lower_route() {
  return {
      [](const FGPair& p) { return apply_transform(p, gauge_43().inverse()); },
      // phi-system == constraint reduction of dJKT2_1; embed
      [](const FGPair& p) {
        FGPair d1 = catalog("dJKT2_1");
        require_equal(p, reduce_constraint_row(d1, 3).pair, "phi-system vs dJKT2_1 reduction");
        return d1;
      },
      [](const FGPair& p) { return laplace(p, LaplaceDirection::Forward); },
      [](const FGPair& p) { return apply_transform(p, named_transform("chi_gauge")); },
      [](const FGPair& p) { return reduce_constraint_row(p, 2).pair; },
      [](const FGPair& p) { return apply_transform(p, named_transform("htw_gauge")); },
  };
}

std::vector<EdgeReport> run_figure1() {
  std::vector<EdgeReport> out;
  auto edge = [&](const std::string& name, const std::function<bool()>& f) {
    EdgeReport r{name, false, ""};
    try {
      r.pass = f();
    } catch (const Error& e) {
      r.note = e.what();
    }
    out.push_back(std::move(r));
  };

  edge("laplace: JKT1 -> dJKT1", [] {
    return pair_equal(laplace(catalog("JKT1"), LaplaceDirection::Forward), catalog("dJKT1"));
  });
  edge("reduction: dJKT1 -> JM1", [] {
    auto red = reduce_constraint_row(catalog("dJKT1"), 3);
    TransformSpec post;
    post.steps.push_back(Gauge{diag2("-4", "1")});
    return pair_equal(apply_transform(red.pair, post), catalog("JM1"));
  });
  edge("scalar: JM1 -> G1", [] {
    Extension ext{S::w(), parse_ratfunc("lambda - y").num()};
    ScalarPair got = scalar_reduce(catalog("JM1"), 2, ext);
    ScalarPair want = scalar_catalog("G1");
    RatFunc::Bindings b{{S::yp(), RatFunc::var(S::z())}};
    return got.potential == want.potential.substitute(b) && got.r1 == want.r1.substitute(b) &&
           got.r0 == want.r0.substitute(b);
  });
  return out;
}

std::vector<EdgeReport> run_figure2() {
  std::vector<EdgeReport> out;
  auto edge = [&](const std::string& name, const std::function<bool()>& f) {
    EdgeReport r{name, false, ""};
    try {
      r.pass = f();
    } catch (const Error& e) {
      r.note = e.what();
    }
    out.push_back(std::move(r));
  };

  edge("scalar: JM2 -> G2", [] {
    Extension ext{S::w(), parse_ratfunc("u*(lambda - y)").num()};
    ScalarPair got = scalar_reduce(catalog("JM2"), 1, ext);
    ScalarPair want = scalar_catalog("G2");
    RatFunc::Bindings b{{S::yp(), parse_ratfunc("y^2 + z + t/2")},
                        {S::alpha(), parse_ratfunc("1/2 - theta")}};
    return got.potential == want.potential.substitute(b) && got.r1 == want.r1.substitute(b) &&
           got.r0 == want.r0.substitute(b);
  });
  edge("block: JKT2 (kappa2=-1) -> phi-system", [] {
    RatFunc::Bindings k2{{S::kappa2(), parse_ratfunc("-1")}};
    return pair_equal(block_restrict(catalog("JKT2").substituted(k2), 2), catalog("JKT2phi"));
  });
  edge("gauges: phi-system -> JM2 (theta = 1 + kappa1)", [] {
    FGPair img = apply_transform(catalog("JKT2phi"), gauge_43());
    RatFunc::Bindings b{{S::theta(), parse_ratfunc("1 + kappa1")}};
    return pair_equal(img, catalog("JM2").substituted(b));
  });
  edge("laplace: JKT2 -> dJKT2_3", [] {
    return pair_equal(laplace(catalog("JKT2"), LaplaceDirection::Forward), catalog("dJKT2_3"));
  });
  edge("reduction: dJKT2_3 -> psi-system", [] {
    return pair_equal(reduce_constraint_row(catalog("dJKT2_3"), 3).pair, catalog("dJKT2_3psi"));
  });
  edge("twist: psi-system -> HTW (kappa2=-1, kappa1=theta-1)", [] {
    FGPair psi = catalog("dJKT2_3psi").substituted(theta_bindings());
    return pair_equal(apply_transform(psi, named_transform("psi_twist")), catalog("HTW"));
  });
  edge("reduction: dJKT2_1 -> phi-system (theta = 1 + kappa1)", [] {
    FGPair red = reduce_constraint_row(catalog("dJKT2_1"), 3).pair;
    RatFunc::Bindings b{{S::kappa1(), parse_ratfunc("theta - 1")}};
    return pair_equal(red, catalog("JKT2phi").substituted(b));
  });
  edge("laplace: dJKT2_1 -> dJKT2_2", [] {
    return pair_equal(laplace(catalog("dJKT2_1"), LaplaceDirection::Forward), catalog("dJKT2_2"));
  });
  edge("gauge: dJKT2_2 -> chi-system", [] {
    return pair_equal(apply_transform(catalog("dJKT2_2"), named_transform("chi_gauge")),
                      catalog("dJKT2_2chi"));
  });
  edge("reduction: chi-system -> tilde-psi-system", [] {
    return pair_equal(reduce_constraint_row(catalog("dJKT2_2chi"), 2).pair, catalog("dJKT2_2psi"));
  });
  edge("gauge: tilde-psi-system -> HTW", [] {
    return pair_equal(apply_transform(catalog("dJKT2_2psi"), named_transform("htw_gauge")),
                      catalog("HTW"));
  });
  edge("fabri: HTW -> FN", [] {
    FGPair img = apply_transform(catalog("HTW"), named_transform("fabri_htw_fn"));
    RatFunc::Bindings to_y{{S::z(), parse_ratfunc("yp - y^2 - t/2")}};
    RatFunc::Bindings to_theta{{S::alpha(), parse_ratfunc("1/2 - theta")}};
    return pair_equal(img.substituted(to_y), catalog("FN").substituted(to_theta));
  });
  edge("commutativity: upper route == lower route == HTW", [] {
    FGPair start = catalog("JM2");
    FGPair up = run_route(figure2_upper_route(), start);
    FGPair lo = run_route(figure2_lower_route(), start);
    return pair_equal(up, lo) && pair_equal(up, catalog("HTW"));
  });
  return out;
}

}  // namespace fg
