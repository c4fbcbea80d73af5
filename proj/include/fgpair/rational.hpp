#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fg {

enum class Err {
  DivisionByZero,
  UncoveredSymbol,
  NotPolynomialIn,
  UnknownPair,
  DegeneratePair,
  NotEliminable,
  TwistMismatch,
  SingularGauge,
  NonInvertibleSubstitution,
  NotLinearInSpectral,
  RowNotAlgebraic,
  MuOutsideWedge,
  BadOpening,
  StepFailure,
  QuadratureFailure,
  TailNotDecaying,
  TemplateViolation,
  ExtensionUndefined,
  ParseError,
  BadTransform,
};

struct Error : std::runtime_error {
  Err code;
  Error(Err c, const std::string& what) : std::runtime_error(what), code(c) {}
};

using Rat = mpq_class;

// Element of Q(i).  Both components are exact rationals; mpq_class keeps
// them in lowest terms with positive denominator.
struct GRat {
  Rat re, im;

  GRat() : re(0), im(0) {}
  GRat(long v) : re(v), im(0) {}
  GRat(long n, long d) : re(n, d), im(0) { re.canonicalize(); }
  GRat(Rat r) : re(std::move(r)), im(0) {}
  GRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  static GRat imag_unit() { return GRat(Rat(0), Rat(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_one() const { return re == 1 && im == 0; }
  bool is_real() const { return im == 0; }

  GRat operator-() const { return GRat(-re, -im); }
  GRat& operator+=(const GRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GRat& operator-=(const GRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GRat& operator*=(const GRat& o) {
    Rat r = re * o.re - im * o.im;
    Rat i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  GRat& operator/=(const GRat& o) {
    if (o.is_zero()) throw Error(Err::DivisionByZero, "division by zero in Q(i)");
    Rat n = o.re * o.re + o.im * o.im;
    Rat r = (re * o.re + im * o.im) / n;
    Rat i = (im * o.re - re * o.im) / n;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend GRat operator+(GRat a, const GRat& b) { return a += b; }
  friend GRat operator-(GRat a, const GRat& b) { return a -= b; }
  friend GRat operator*(GRat a, const GRat& b) { return a *= b; }
  friend GRat operator/(GRat a, const GRat& b) { return a /= b; }
  friend bool operator==(const GRat& a, const GRat& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const GRat& a, const GRat& b) { return !(a == b); }

  GRat inv() const {
    GRat one(1);
    return one / *this;
  }

  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

  std::string str() const;
};

std::string rat_str(const Rat& r);

}  // namespace fg
