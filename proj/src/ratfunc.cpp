#include "fgpair/ratfunc.hpp"

#include "fgpair/derivation.hpp"

namespace fg {

namespace {
thread_local const Extension* g_ext = nullptr;
}

const Extension* active_extension() { return g_ext; }

ExtScope::ExtScope(const Extension& e) : prev_(g_ext) {
  if (e.rel.contains(e.w))
    throw Error(Err::BadTransform, "extension relation must be free of the extension symbol");
  g_ext = &e;
}
ExtScope::~ExtScope() { g_ext = prev_; }

// Rewrite w^k (k >= 2) using w^2 = rel.  Confluent: each monomial reduces
// independently to rel^(k/2) * w^(k mod 2).
static Poly w_reduce(const Poly& p) {
  const Extension* ext = g_ext;
  if (!ext) return p;
  bool touched = false;
  for (auto& [m, c] : p.terms())
    if (m.e[ext->w] >= 2) {
      touched = true;
      break;
    }
  if (!touched) return p;
  Poly out;
  for (auto& [m, c] : p.terms()) {
    int k = m.e[ext->w];
    if (k < 2) {
      out.add_term(m, c);
      continue;
    }
    Mono base = m;
    base.e[ext->w] = static_cast<uint8_t>(k % 2);
    out += Poly::term(c, base) * ext->rel.pow(k / 2);
  }
  return out;
}

void RatFunc::normalize() {
  num_ = w_reduce(num_);
  den_ = w_reduce(den_);
  if (den_.is_zero()) throw Error(Err::DivisionByZero, "zero denominator");
  if (num_.is_zero()) {
    den_ = Poly(GRat(1));
    return;
  }
  const Extension* ext = g_ext;
  if (ext && den_.contains(ext->w)) {
    // den = C + D*w; multiply through by C - D*w
    Poly C = den_.coeff_of(ext->w, 0);
    Poly D = den_.coeff_of(ext->w, 1);
    Poly wv = Poly::var(ext->w);
    Poly conj = C - D * wv;
    num_ = w_reduce(num_ * conj);
    den_ = C * C - D * D * ext->rel;
    if (den_.is_zero())
      throw Error(Err::DivisionByZero, "extension relation is a perfect square against this denominator");
  }
  Poly g;
  if (ext && num_.contains(ext->w)) {
    Poly A = num_.coeff_of(ext->w, 0);
    Poly B = num_.coeff_of(ext->w, 1);
    g = Poly::gcd(Poly::gcd(A, B), den_);
  } else {
    g = Poly::gcd(num_, den_);
  }
  if (!g.is_one()) {
    num_ = Poly::divexact(num_, g);
    den_ = Poly::divexact(den_, g);
  }
  GRat lc = den_.leading_coeff();
  if (!lc.is_one()) {
    GRat inv = lc.inv();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw Error(Err::DivisionByZero, "division by zero rational function");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  normalize();
  return *this;
}

RatFunc RatFunc::inv() const {
  if (is_zero()) throw Error(Err::DivisionByZero, "inverse of zero");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int k) const {
  if (k < 0) return inv().pow(-k);
  RatFunc r(1);
  RatFunc b = *this;
  while (k > 0) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

// derivative of a bare polynomial, with the w chain rule folded in
static RatFunc poly_diff_spectral(const Poly& p, Sym s) {
  RatFunc base(p.derivative(s));
  const Extension* ext = g_ext;
  if (ext && p.contains(ext->w) && ext->rel.contains(s)) {
    // dw/ds = rel_s * w / (2 rel)
    RatFunc w_s = RatFunc(ext->rel.derivative(s)) * RatFunc::var(ext->w) /
                  (RatFunc(2) * RatFunc(ext->rel));
    base += RatFunc(p.derivative(ext->w)) * w_s;
  }
  return base;
}

RatFunc RatFunc::diff_spectral(Sym s) const {
  if (sym_kind(s) != SymKind::Spectral)
    throw Error(Err::NotPolynomialIn, std::string("diff_spectral expects a spectral symbol, got ") + sym_name(s));
  RatFunc dn = poly_diff_spectral(num_, s);
  RatFunc dd = poly_diff_spectral(den_, s);
  RatFunc D(den_);
  return (dn * D - RatFunc(num_) * dd) / (D * D);
}

static RatFunc poly_diff_t(const Poly& p, const DerivationTable& table) {
  RatFunc out;
  const Extension* ext = g_ext;
  for (Sym s : p.support()) {
    RatFunc ds;  // d s / dt
    switch (sym_kind(s)) {
      case SymKind::Time:
        ds = RatFunc(1);
        break;
      case SymKind::Spectral:
      case SymKind::Parameter:
        continue;
      case SymKind::Dependent:
        if (table.has(s)) {
          ds = table.rule(s);
        } else if (ext && s == ext->w) {
          ds = poly_diff_t(ext->rel, table) * RatFunc::var(s) / (RatFunc(2) * RatFunc(ext->rel));
        } else {
          throw Error(Err::UncoveredSymbol, std::string("no t-derivative rule for ") + sym_name(s));
        }
        break;
    }
    out += RatFunc(p.derivative(s)) * ds;
  }
  return out;
}

RatFunc RatFunc::diff_t(const DerivationTable& table) const {
  RatFunc dn = poly_diff_t(num_, table);
  RatFunc dd = poly_diff_t(den_, table);
  RatFunc D(den_);
  return (dn * D - RatFunc(num_) * dd) / (D * D);
}

static RatFunc poly_substitute(const Poly& p, const RatFunc::Bindings& b) {
  RatFunc out;
  for (auto& [m, c] : p.terms()) {
    RatFunc term(c);
    for (int s = 0; s < kSymCount; ++s) {
      if (!m.e[s]) continue;
      auto it = b.find(s);
      RatFunc base = (it != b.end()) ? it->second : RatFunc::var(s);
      term *= base.pow(m.e[s]);
    }
    out += term;
  }
  return out;
}

RatFunc RatFunc::substitute(const Bindings& b) const {
  RatFunc dn = poly_substitute(num_, b);
  RatFunc dd = poly_substitute(den_, b);
  if (dd.is_zero()) throw Error(Err::DivisionByZero, "denominator vanishes under substitution");
  return dn / dd;
}

RatFunc RatFunc::coeff_in(Sym s, int degree) const {
  if (den_.contains(s))
    throw Error(Err::NotPolynomialIn, std::string("not polynomial in ") + sym_name(s));
  return RatFunc(num_.coeff_of(s, degree), den_);
}

void RatFunc::parity_split(Sym s, RatFunc& even, RatFunc& odd) const {
  Bindings flip{{s, -RatFunc::var(s)}};
  RatFunc neg = substitute(flip);
  RatFunc half = RatFunc::of(1, 2);
  even = (*this + neg) * half;
  RatFunc sv = RatFunc::var(s);
  odd = (*this - neg) * half / sv;
}

const RatFunc& DerivationTable::rule(Sym dep) const {
  auto it = rules_.find(dep);
  if (it == rules_.end())
    throw Error(Err::UncoveredSymbol, std::string("no rule for ") + sym_name(dep));
  return it->second;
}

DerivationTable DerivationTable::substituted(const RatFunc::Bindings& b) const {
  DerivationTable out;
  for (auto& [s, r] : rules_) {
    if (b.count(s)) continue;  // substituted symbols leave the table
    out.set(s, r.substitute(b));
  }
  for (auto& [s, r] : constraints_) {
    if (b.count(s)) continue;
    out.constrain(s, r.substitute(b));
  }
  return out;
}

}  // namespace fg
