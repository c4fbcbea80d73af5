#pragma once

#include <map>
#include <optional>
#include <vector>

#include "fgpair/symbols.hpp"

namespace fg {

// Monomial = exponent vector over the global registry.
struct Mono {
  std::array<uint8_t, kSymCount> e{};

  int deg() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }
  bool is_one() const {
    for (auto x : e)
      if (x) return false;
    return true;
  }
  friend bool operator==(const Mono& a, const Mono& b) { return a.e == b.e; }
};

// Graded lexicographic order, ascending (map iteration ends at the leading
// monomial).  Ties broken by the registry priority: lower index wins.
struct GradedLexLess {
  bool operator()(const Mono& a, const Mono& b) const {
    int da = a.deg(), db = b.deg();
    if (da != db) return da < db;
    for (int i = 0; i < kSymCount; ++i)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    return false;
  }
};

// Sparse multivariate polynomial over Q(i).
class Poly {
 public:
  using Terms = std::map<Mono, GRat, GradedLexLess>;

  Poly() = default;
  explicit Poly(GRat c) {
    if (!c.is_zero()) terms_[Mono{}] = std::move(c);
  }
  explicit Poly(long v) : Poly(GRat(v)) {}

  static Poly var(Sym s, int pow = 1) {
    Poly p;
    Mono m;
    m.e[s] = static_cast<uint8_t>(pow);
    if (pow == 0)
      p.terms_[Mono{}] = GRat(1);
    else
      p.terms_[m] = GRat(1);
    return p;
  }
  static Poly term(GRat c, const Mono& m) {
    Poly p;
    if (!c.is_zero()) p.terms_[m] = std::move(c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }
  GRat constant_value() const {
    if (terms_.empty()) return GRat(0);
    auto it = terms_.find(Mono{});
    return it == terms_.end() ? GRat(0) : it->second;
  }
  bool is_one() const { return is_constant() && constant_value().is_one(); }

  int total_deg() const { return terms_.empty() ? -1 : terms_.rbegin()->first.deg(); }
  int deg_in(Sym s) const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, int(m.e[s]));
    return terms_.empty() ? -1 : d;
  }
  bool contains(Sym s) const {
    for (auto& [m, c] : terms_)
      if (m.e[s]) return true;
    return false;
  }
  std::vector<Sym> support() const {
    std::vector<Sym> out;
    for (int s = 0; s < kSymCount; ++s)
      if (contains(s)) out.push_back(s);
    return out;
  }

  const Mono& leading_mono() const { return terms_.rbegin()->first; }
  const GRat& leading_coeff() const { return terms_.rbegin()->second; }

  void add_term(const Mono& m, const GRat& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly scaled(const GRat& c) const;
  Poly pow(int k) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // d/ds, treating every other symbol as constant.
  Poly derivative(Sym s) const;

  // Coefficient of s^k, a polynomial in the remaining symbols.
  Poly coeff_of(Sym s, int k) const;

  // Exact division; throws if the division leaves a remainder.
  static Poly divexact(const Poly& a, const Poly& b);
  static bool try_divexact(const Poly& a, const Poly& b, Poly& quot);

  // Pseudo-remainder of a by b, both viewed as univariate in s.
  static Poly prem(const Poly& a, const Poly& b, Sym s);

  // GCD over Q(i)[symbols], monic leading coefficient.
  static Poly gcd(const Poly& a, const Poly& b);

  // Monic under the global order (leading coefficient 1); zero stays zero.
  Poly monic() const;

 private:
  Terms terms_;
};

}  // namespace fg
