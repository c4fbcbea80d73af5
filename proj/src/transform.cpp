#include "fgpair/transform.hpp"

#include "fgpair/expr.hpp"

namespace fg {

namespace {

MatrixRat sigma3(int n) {
  if (n != 2) throw Error(Err::BadTransform, "sigma3 twists need a 2x2 pair");
  MatrixRat m(2);
  m.at(0, 0) = RatFunc(1);
  m.at(1, 1) = RatFunc(-1);
  return m;
}

// D^{-1} X D for D = b^{q sigma3}: off-diagonals pick up b^{-+2q}.
MatrixRat conj_sigma3_power(const MatrixRat& x, Sym base, const Rat& q) {
  Rat two_q = 2 * q;
  if (two_q.get_den() != 1)
    throw Error(Err::BadTransform, "sigma3 power twist needs 2q integral");
  int k = static_cast<int>(two_q.get_num().get_si());
  MatrixRat r = x;
  RatFunc b = RatFunc::var(base);
  r.at(0, 1) = r.at(0, 1) * b.pow(-k);
  r.at(1, 0) = r.at(1, 0) * b.pow(k);
  return r;
}

FGPair apply_gauge(const FGPair& p, const MatrixRat& G) {
  if (G.size() != p.size()) throw Error(Err::BadTransform, "gauge size mismatch");
  RatFunc d = G.det();
  if (d.is_zero()) throw Error(Err::SingularGauge, "gauge with identically zero determinant");
  MatrixRat Ginv = G.inverse();
  MatrixRat Gs = G.diff_spectral(p.spectral);
  MatrixRat Gt = G.diff_t(p.table);
  FGPair out = p;
  out.L = p.L * G;
  out.R = p.R * G - p.L * Gs;
  out.T1 = Ginv * p.T1 * G;
  out.T0 = Ginv * (p.T1.scaled(RatFunc::var(p.spectral)) * Gs + p.T0 * G - Gt);
  return out;
}

FGPair apply_exp_twist(const FGPair& p, const RatFunc& f) {
  RatFunc fs = f.diff_spectral(p.spectral);
  RatFunc ft = f.diff_t(p.table);
  FGPair out = p;
  out.R = p.R - p.L.scaled(fs);
  out.T0 = p.T0 + p.T1.scaled(RatFunc::var(p.spectral) * fs) - MatrixRat::identity(p.size()).scaled(ft);
  return out;
}

FGPair apply_power_twist(const FGPair& p, const RatFunc& pw) {
  for (Sym s : pw.num().support())
    if (sym_kind(s) != SymKind::Parameter)
      throw Error(Err::BadTransform, "power twist exponent must be parameter-valued");
  RatFunc over_s = pw / RatFunc::var(p.spectral);
  FGPair out = p;
  out.R = p.R - p.L.scaled(over_s);
  out.T0 = p.T0 + p.T1.scaled(pw);
  return out;
}

FGPair apply_sigma3_power(const FGPair& p, const Sigma3Power& st) {
  FGPair out = p;
  auto conj = [&](const MatrixRat& m) { return conj_sigma3_power(m, st.base, st.q); };
  RatFunc qv{GRat(st.q)};
  if (sym_kind(st.base) == SymKind::Spectral) {
    if (st.base != p.spectral) throw Error(Err::BadTransform, "sigma3 power in a foreign spectral symbol");
    RatFunc q_over_s = qv / RatFunc::var(p.spectral);
    out.L = conj(p.L);
    out.R = conj(p.R) - (out.L * sigma3(p.size())).scaled(q_over_s);
    out.T1 = conj(p.T1);
    out.T0 = conj(p.T0) + (out.T1 * sigma3(p.size())).scaled(qv);
  } else {
    if (!p.table.has(st.base))
      throw Error(Err::UncoveredSymbol, "sigma3 power base has no t-rule");
    RatFunc glog = p.table.rule(st.base) / RatFunc::var(st.base);
    out.L = conj(p.L);
    out.R = conj(p.R);
    out.T1 = conj(p.T1);
    out.T0 = conj(p.T0) - sigma3(p.size()).scaled(qv * glog);
  }
  return out;
}

FGPair apply_substitute(const FGPair& p, const Substitute& st) {
  if (st.from != p.spectral)
    throw Error(Err::NonInvertibleSubstitution, "substitution source symbol mismatch");
  FGPair out = p;
  if (!st.quad) {
    // s -> -s, same symbol
    RatFunc::Bindings b{{p.spectral, -RatFunc::var(p.spectral)}};
    out.L = -p.L.substitute(b);
    out.R = p.R.substitute(b);
    out.T1 = p.T1.substitute(b);
    out.T0 = p.T0.substitute(b);
    return out;
  }
  if (st.to == p.spectral) throw Error(Err::NonInvertibleSubstitution, "quadratic substitution needs a fresh symbol");
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < p.size(); ++j)
      if (p.L.at(i, j).contains(st.to) || p.R.at(i, j).contains(st.to) ||
          p.T0.at(i, j).contains(st.to) || p.T1.at(i, j).contains(st.to))
        throw Error(Err::NonInvertibleSubstitution, "substitution target symbol not fresh");
  RatFunc zeta = RatFunc::var(st.to);
  RatFunc phi = RatFunc(st.c) * zeta * zeta;
  RatFunc phi_prime = RatFunc(GRat(2) * st.c) * zeta;
  RatFunc::Bindings b{{p.spectral, phi}};
  out.spectral = st.to;
  out.L = p.L.substitute(b).scaled(phi_prime.inv());
  out.R = p.R.substitute(b);
  out.T1 = p.T1.substitute(b).scaled(RatFunc::of(1, 2));  // s d/ds = (zeta/2) d/dzeta
  out.T0 = p.T0.substitute(b);
  return out;
}

RatFunc rewrite_even(const RatFunc& f, Sym zeta, Sym to, const GRat& c) {
  RatFunc even, odd;
  f.parity_split(zeta, even, odd);
  if (!odd.is_zero())
    throw Error(Err::NonInvertibleSubstitution, "pair is not even in the spectral symbol");
  auto half_powers = [&](const Poly& p) {
    Poly out;
    for (auto& [m, co] : p.terms()) {
      if (m.e[zeta] % 2)
        throw Error(Err::NonInvertibleSubstitution, "odd exponent survives parity split");
      Mono mm = m;
      int k = m.e[zeta] / 2;
      mm.e[zeta] = 0;
      mm.e[to] = static_cast<uint8_t>(mm.e[to] + k);
      GRat scale = GRat(c).inv();
      GRat cc(1);
      for (int i = 0; i < k; ++i) cc *= scale;
      out.add_term(mm, co * cc);
    }
    return out;
  };
  return RatFunc(half_powers(even.num()), half_powers(even.den()));
}

FGPair apply_desubstitute(const FGPair& p, const Desubstitute& st) {
  if (st.from != p.spectral)
    throw Error(Err::NonInvertibleSubstitution, "substitution source symbol mismatch");
  if (p.degenerate())
    throw Error(Err::NonInvertibleSubstitution, "cannot invert a substitution on a degenerate pair");
  Sym zeta = p.spectral;
  FGPair out = p;
  out.spectral = st.to;
  RatFunc phi_prime = RatFunc(GRat(2) * st.c) * RatFunc::var(zeta);
  auto back = [&](const RatFunc& f) { return rewrite_even(f, zeta, st.to, st.c); };
  // the quadratic preimage is read off the solved presentation
  out.L = MatrixRat::identity(p.size());
  out.R = p.solved_A().scaled(phi_prime.inv()).map(back);
  out.T1 = p.T1.scaled(RatFunc(2)).map(back);
  out.T0 = p.T0.map(back);
  return out;
}

}  // namespace

FGPair apply_transform(const FGPair& p, const TransformSpec& spec) {
  FGPair cur = p;
  for (const auto& step : spec.steps) {
    cur = std::visit(
        [&](const auto& st) -> FGPair {
          using T = std::decay_t<decltype(st)>;
          if constexpr (std::is_same_v<T, Gauge>) return apply_gauge(cur, st.G);
          if constexpr (std::is_same_v<T, ExpTwist>) return apply_exp_twist(cur, st.f);
          if constexpr (std::is_same_v<T, PowerTwist>) return apply_power_twist(cur, st.p);
          if constexpr (std::is_same_v<T, Sigma3Power>) return apply_sigma3_power(cur, st);
          if constexpr (std::is_same_v<T, Substitute>) return apply_substitute(cur, st);
          if constexpr (std::is_same_v<T, Desubstitute>) return apply_desubstitute(cur, st);
        },
        step);
  }
  return cur;
}

TransformSpec TransformSpec::then(const TransformSpec& next) const {
  TransformSpec out = *this;
  out.steps.insert(out.steps.end(), next.steps.begin(), next.steps.end());
  return out;
}

TransformSpec TransformSpec::inverse() const {
  TransformSpec out;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    std::visit(
        [&](const auto& st) {
          using T = std::decay_t<decltype(st)>;
          if constexpr (std::is_same_v<T, Gauge>) out.steps.push_back(Gauge{st.G.inverse()});
          if constexpr (std::is_same_v<T, ExpTwist>) out.steps.push_back(ExpTwist{-st.f});
          if constexpr (std::is_same_v<T, PowerTwist>) out.steps.push_back(PowerTwist{-st.p});
          if constexpr (std::is_same_v<T, Sigma3Power>) out.steps.push_back(Sigma3Power{st.base, -st.q});
          if constexpr (std::is_same_v<T, Substitute>) {
            if (st.quad)
              out.steps.push_back(Desubstitute{st.to, st.from, st.c});
            else
              out.steps.push_back(st);  // reflection is an involution
          }
          if constexpr (std::is_same_v<T, Desubstitute>)
            out.steps.push_back(Substitute{st.to, st.from, st.c, true});
        },
        *it);
  }
  return out;
}

bool check_symmetry(const FGPair& p, const MatrixRat& gauge) {
  if (gauge.det().is_zero()) throw Error(Err::SingularGauge, "symmetry gauge singular");
  TransformSpec spec;
  spec.steps.push_back(Substitute{p.spectral, p.spectral, GRat(1), false});
  spec.steps.push_back(Gauge{gauge});
  return pair_equal(apply_transform(p, spec), p);
}

namespace {

MatrixRat mat2(const char* a, const char* b, const char* c, const char* d) {
  MatrixRat m(2);
  m.at(0, 0) = parse_ratfunc(a);
  m.at(0, 1) = parse_ratfunc(b);
  m.at(1, 0) = parse_ratfunc(c);
  m.at(1, 1) = parse_ratfunc(d);
  return m;
}

MatrixRat mat3(std::initializer_list<const char*> cells) {
  MatrixRat m(3);
  int k = 0;
  for (const char* c : cells) {
    m.at(k / 3, k % 3) = parse_ratfunc(c);
    ++k;
  }
  return m;
}

}  // namespace

TransformSpec named_transform(const std::string& name) {
  TransformSpec s;
  if (name == "fabri_p1") {
    s.steps.push_back(Substitute{S::lambda(), S::zeta(), GRat(1), true});
    s.steps.push_back(Gauge{mat2("1", "-zeta/2", "0", "1")});
  } else if (name == "fabri_htw_fn") {
    s.steps.push_back(Substitute{S::mu(), S::zeta(), GRat(-2), true});
    s.steps.push_back(Sigma3Power{S::zeta(), Rat(1, 2)});
    s.steps.push_back(Gauge{mat2("1", "1", "-i/2", "i/2")});
  } else if (name == "cm2_to_jm2") {
    s.steps.push_back(Gauge{mat2("lambda + y", "1", "1", "0")});
    s.steps.push_back(Sigma3Power{S::u(), Rat(-1, 2)});
  } else if (name == "u_gauge") {
    s.steps.push_back(Gauge{mat2("0", "1/2", "-1/u", "0")});
  } else if (name == "cubic_twist") {
    s.steps.push_back(ExpTwist{parse_ratfunc("-(lambda^3/3 + lambda*t/2)")});
  } else if (name == "chi_gauge") {
    s.steps.push_back(Gauge{mat3({"0", "0", "1", "1/z", "1/z", "0", "0", "-1/2", "0"})});
  } else if (name == "htw_gauge") {
    s.steps.push_back(Gauge{mat2("-1", "-2*y", "0", "1")});
    s.steps.push_back(PowerTwist{parse_ratfunc("theta/2")});
  } else if (name == "psi_twist") {
    s.steps.push_back(PowerTwist{parse_ratfunc("-1 + theta/2")});
  } else {
    throw Error(Err::UnknownPair, "unknown transform: " + name);
  }
  return s;
}

std::vector<std::string> transform_names() {
  return {"fabri_p1", "fabri_htw_fn", "cm2_to_jm2", "u_gauge",
          "cubic_twist", "chi_gauge", "htw_gauge", "psi_twist"};
}

}  // namespace fg
