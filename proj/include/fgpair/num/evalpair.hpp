#pragma once

#include <array>

#include "fgpair/matrix.hpp"
#include "fgpair/num/ode.hpp"

namespace fg::num {

// 2x2 complex matrix, the working type of the float layer.
struct M2 {
  C a{}, b{}, c{}, d{};

  static M2 id() { return {1.0, 0.0, 0.0, 1.0}; }
  C det() const { return a * d - b * c; }
  M2 inv() const {
    C dt = det();
    return {d / dt, -b / dt, -c / dt, a / dt};
  }
  friend M2 operator*(const M2& x, const M2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d};
  }
  friend M2 operator-(const M2& x, const M2& y) {
    return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
  }
  friend M2 operator*(C s, const M2& x) { return {s * x.a, s * x.b, s * x.c, s * x.d}; }
  double fro() const {
    return std::sqrt(std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d));
  }
  double maxabs() const {
    return std::max(std::max(std::abs(a), std::abs(b)), std::max(std::abs(c), std::abs(d)));
  }
};

using SymVals = std::array<C, kSymCount>;

// Rational-function entries compiled to float-evaluable term lists; the one
// source of truth for matrix data stays the exact catalog.
struct CompiledRF {
  struct Term {
    C coeff;
    std::vector<std::pair<int, int>> pows;  // (symbol, exponent)
  };
  std::vector<Term> num, den;

  static CompiledRF from(const RatFunc& f);
  C eval(const SymVals& v) const;
};

struct CompiledMatrix {
  int n = 0;
  std::vector<CompiledRF> e;

  static CompiledMatrix from(const MatrixRat& m);
  M2 eval2(const SymVals& v) const;
};

}  // namespace fg::num
