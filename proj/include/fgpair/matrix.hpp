#pragma once

#include <vector>

#include "fgpair/ratfunc.hpp"

namespace fg {

// Small dense matrix of exact rational functions (n = 2 or 3 in the catalog).
class MatrixRat {
 public:
  MatrixRat() : n_(0) {}
  explicit MatrixRat(int n) : n_(n), a_(n * n) {}
  static MatrixRat identity(int n) {
    MatrixRat m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = RatFunc(1);
    return m;
  }
  static MatrixRat zero(int n) { return MatrixRat(n); }

  int size() const { return n_; }
  RatFunc& at(int i, int j) { return a_[i * n_ + j]; }
  const RatFunc& at(int i, int j) const { return a_[i * n_ + j]; }

  bool is_zero() const;
  MatrixRat operator-() const;
  friend MatrixRat operator+(const MatrixRat& a, const MatrixRat& b);
  friend MatrixRat operator-(const MatrixRat& a, const MatrixRat& b);
  friend MatrixRat operator*(const MatrixRat& a, const MatrixRat& b);
  MatrixRat scaled(const RatFunc& c) const;
  friend bool operator==(const MatrixRat& a, const MatrixRat& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

  RatFunc det() const;
  MatrixRat adjugate() const;
  MatrixRat inverse() const;  // throws SingularGauge when det == 0

  MatrixRat map(const std::function<RatFunc(const RatFunc&)>& f) const;
  MatrixRat substitute(const RatFunc::Bindings& b) const;
  MatrixRat diff_spectral(Sym s) const;
  MatrixRat diff_t(const DerivationTable& t) const;

  static MatrixRat commutator(const MatrixRat& a, const MatrixRat& b) { return a * b - b * a; }

 private:
  int n_;
  std::vector<RatFunc> a_;
};

}  // namespace fg
