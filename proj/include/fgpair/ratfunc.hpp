#pragma once

#include <map>
#include <string>

#include "fgpair/poly.hpp"

namespace fg {

// Active quadratic extension: the symbol w together with the polynomial
// relation w^2 = rel (rel free of w).  At most one extension is active at a
// time; activation is scoped.
struct Extension {
  Sym w;
  Poly rel;
};

const Extension* active_extension();

class ExtScope {
 public:
  explicit ExtScope(const Extension& e);
  ~ExtScope();
  ExtScope(const ExtScope&) = delete;
  ExtScope& operator=(const ExtScope&) = delete;

 private:
  const Extension* prev_;
};

class DerivationTable;

// Rational function over Q(i) in the registered symbols, kept in canonical
// form: gcd(num, den) = 1, den monic under the graded-lex order, and no
// monomial carries the extension symbol to a power >= 2 while an extension
// is active (the denominator is cleared of w entirely).
class RatFunc {
 public:
  RatFunc() : num_(), den_(GRat(1)) {}
  explicit RatFunc(long v) : num_(GRat(v)), den_(GRat(1)) {}
  explicit RatFunc(GRat c) : num_(std::move(c)), den_(GRat(1)) {}
  explicit RatFunc(Poly p) : num_(std::move(p)), den_(GRat(1)) { normalize(); }
  RatFunc(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

  static RatFunc var(Sym s) { return RatFunc(Poly::var(s)); }
  static RatFunc of(long n, long d) { return RatFunc(Poly(GRat(n)), Poly(GRat(d))); }
  static RatFunc imag_unit() { return RatFunc(GRat::imag_unit()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool contains(Sym s) const { return num_.contains(s) || den_.contains(s); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  RatFunc inv() const;
  RatFunc pow(int k) const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  std::string str() const;

  RatFunc diff_spectral(Sym s) const;
  RatFunc diff_t(const DerivationTable& table) const;

  using Bindings = std::map<Sym, RatFunc>;
  RatFunc substitute(const Bindings& b) const;

  // Exact coefficient of s^degree; requires the denominator free of s.
  RatFunc coeff_in(Sym s, int degree) const;

  // Splits f = even(s^2) + s*odd(s^2) and rewrites s^2 -> v.  Throws
  // NonInvertibleSubstitution if the requested parity component is absent
  // where it must vanish.
  void parity_split(Sym s, RatFunc& even, RatFunc& odd) const;

 private:
  void normalize();
  Poly num_, den_;
};

}  // namespace fg
