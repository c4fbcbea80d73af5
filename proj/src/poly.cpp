#include "fgpair/poly.hpp"

namespace fg {

void Poly::add_term(const Mono& m, const GRat& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r;
  for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (auto& [ma, ca] : a.terms_) {
    for (auto& [mb, cb] : b.terms_) {
      Mono m;
      for (int i = 0; i < kSymCount; ++i) m.e[i] = static_cast<uint8_t>(ma.e[i] + mb.e[i]);
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Poly Poly::scaled(const GRat& c) const {
  Poly r;
  if (c.is_zero()) return r;
  for (auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

Poly Poly::pow(int k) const {
  Poly r(GRat(1));
  Poly base = *this;
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

Poly Poly::derivative(Sym s) const {
  Poly r;
  for (auto& [m, c] : terms_) {
    if (!m.e[s]) continue;
    Mono d = m;
    d.e[s] -= 1;
    r.add_term(d, c * GRat(long(m.e[s])));
  }
  return r;
}

Poly Poly::coeff_of(Sym s, int k) const {
  Poly r;
  for (auto& [m, c] : terms_) {
    if (int(m.e[s]) != k) continue;
    Mono d = m;
    d.e[s] = 0;
    r.add_term(d, c);
  }
  return r;
}

static bool mono_divides(const Mono& a, const Mono& b) {
  // does a divide b
  for (int i = 0; i < kSymCount; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

static Mono mono_div(const Mono& b, const Mono& a) {
  Mono m;
  for (int i = 0; i < kSymCount; ++i) m.e[i] = static_cast<uint8_t>(b.e[i] - a.e[i]);
  return m;
}

bool Poly::try_divexact(const Poly& a, const Poly& b, Poly& quot) {
  if (b.is_zero()) throw Error(Err::DivisionByZero, "polynomial division by zero");
  Poly rem = a, q;
  const Mono& lb = b.leading_mono();
  const GRat& cb = b.leading_coeff();
  while (!rem.is_zero()) {
    const Mono& lr = rem.leading_mono();
    if (!mono_divides(lb, lr)) return false;
    GRat c = rem.leading_coeff() / cb;
    Mono m = mono_div(lr, lb);
    Poly t = Poly::term(c, m);
    q += t;
    rem -= t * b;
  }
  quot = std::move(q);
  return true;
}

Poly Poly::divexact(const Poly& a, const Poly& b) {
  Poly q;
  if (!try_divexact(a, b, q)) throw Error(Err::DivisionByZero, "inexact polynomial division");
  return q;
}

Poly Poly::prem(const Poly& a, const Poly& b, Sym s) {
  int db = b.deg_in(s);
  if (db < 0) throw Error(Err::DivisionByZero, "prem by zero");
  int da = a.deg_in(s);
  if (da < db) return a;
  Poly lb = b.coeff_of(s, db);
  Poly r = a;
  int steps = 0;
  int dr;
  while (!r.is_zero() && (dr = r.deg_in(s)) >= db) {
    Poly lr = r.coeff_of(s, dr);
    Poly shift = Poly::var(s, dr - db);
    r = r * lb - lr * shift * b;
    ++steps;
  }
  // normalize to lc(b)^(da-db+1) * a = q*b + r exactly
  int want = da - db + 1;
  if (steps < want) r = r * lb.pow(want - steps);
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading_coeff().inv());
}

// common monomial factor of all terms
static Mono common_mono(const Poly& p) {
  Mono m;
  bool first = true;
  for (auto& [mono, c] : p.terms()) {
    if (first) {
      m = mono;
      first = false;
    } else {
      for (int i = 0; i < kSymCount; ++i) m.e[i] = std::min(m.e[i], mono.e[i]);
    }
  }
  return m;
}

// gcd of the coefficients of p viewed univariately in s
static Poly content_in(const Poly& p, Sym s) {
  Poly c;
  for (int k = 0; k <= p.deg_in(s); ++k) {
    Poly ck = p.coeff_of(s, k);
    if (ck.is_zero()) continue;
    c = c.is_zero() ? ck : Poly::gcd(c, ck);
    if (c.is_constant()) break;
  }
  return c;
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(GRat(1));

  // monomial factors come out first
  Mono ma = common_mono(a), mb = common_mono(b);
  Mono shared;
  bool stripped = false;
  for (int i = 0; i < kSymCount; ++i) {
    shared.e[i] = std::min(ma.e[i], mb.e[i]);
    if (ma.e[i] || mb.e[i]) stripped = true;
  }
  if (stripped) {
    Poly sa = divexact(a, Poly::term(GRat(1), ma));
    Poly sb = divexact(b, Poly::term(GRat(1), mb));
    return (Poly::term(GRat(1), shared) * gcd(sa, sb)).monic();
  }

  if (a == b) return a.monic();
  if (a.terms().size() == 1 || b.terms().size() == 1) return Poly(GRat(1));
  {  // divisibility shortcuts
    Poly q;
    if (a.total_deg() >= b.total_deg() && try_divexact(a, b, q)) return b.monic();
    if (b.total_deg() >= a.total_deg() && try_divexact(b, a, q)) return a.monic();
  }

  // main variable: present in both, fewest PRS steps first
  Sym v = -1;
  int best = 0;
  for (int s = 0; s < kSymCount; ++s) {
    if (!a.contains(s) || !b.contains(s)) continue;
    int d = std::min(a.deg_in(s), b.deg_in(s));
    if (v < 0 || d < best) {
      v = s;
      best = d;
    }
  }
  if (v < 0) {
    // no shared variable: gcd divides both contents recursively
    for (int s = 0; s < kSymCount; ++s)
      if (a.contains(s)) return gcd(content_in(a, s), b).monic();
    return Poly(GRat(1));
  }

  Poly ca = content_in(a, v), cb = content_in(b, v);
  Poly pa = divexact(a, ca), pb = divexact(b, cb);
  Poly cont = gcd(ca, cb);

  // subresultant PRS in v (Brown-Traub), exact divisions only
  Poly r0 = pa, r1 = pb;
  if (r0.deg_in(v) < r1.deg_in(v)) std::swap(r0, r1);
  Poly g(GRat(1)), h(GRat(1));
  while (true) {
    int d0 = r0.deg_in(v), d1 = r1.deg_in(v);
    int delta = d0 - d1;
    Poly rem = prem(r0, r1, v);
    if (rem.is_zero()) break;
    Poly divisor = g * h.pow(delta);
    rem = divexact(rem, divisor);
    g = r1.coeff_of(v, d1);
    if (delta >= 1) h = divexact(g.pow(delta), h.pow(delta - 1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    if (r1.deg_in(v) == 0) return cont.monic();
  }
  Poly pp = divexact(r1, content_in(r1, v));
  return (cont * pp).monic();
}

}  // namespace fg
