#include "fgpair/matrix.hpp"

#include <functional>

#include "fgpair/derivation.hpp"

namespace fg {

bool MatrixRat::is_zero() const {
  for (auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

MatrixRat MatrixRat::operator-() const {
  MatrixRat r(n_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
  return r;
}

MatrixRat operator+(const MatrixRat& a, const MatrixRat& b) {
  MatrixRat r(a.n_);
  for (size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
  return r;
}

MatrixRat operator-(const MatrixRat& a, const MatrixRat& b) {
  MatrixRat r(a.n_);
  for (size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
  return r;
}

MatrixRat operator*(const MatrixRat& a, const MatrixRat& b) {
  int n = a.n_;
  MatrixRat r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RatFunc s;
      for (int k = 0; k < n; ++k) s += a.at(i, k) * b.at(k, j);
      r.at(i, j) = s;
    }
  return r;
}

MatrixRat MatrixRat::scaled(const RatFunc& c) const {
  MatrixRat r(n_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
  return r;
}

RatFunc MatrixRat::det() const {
  if (n_ == 1) return at(0, 0);
  if (n_ == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
  if (n_ == 3) {
    RatFunc d;
    d += at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1));
    d -= at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0));
    d += at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
    return d;
  }
  throw Error(Err::BadTransform, "det: unsupported size");
}

MatrixRat MatrixRat::adjugate() const {
  MatrixRat r(n_);
  if (n_ == 1) {
    r.at(0, 0) = RatFunc(1);
    return r;
  }
  if (n_ == 2) {
    r.at(0, 0) = at(1, 1);
    r.at(0, 1) = -at(0, 1);
    r.at(1, 0) = -at(1, 0);
    r.at(1, 1) = at(0, 0);
    return r;
  }
  if (n_ == 3) {
    auto minor = [&](int i, int j) {
      int r0 = (i + 1) % 3, r1 = (i + 2) % 3;
      int c0 = (j + 1) % 3, c1 = (j + 2) % 3;
      if (r0 > r1) std::swap(r0, r1);
      if (c0 > c1) std::swap(c0, c1);
      RatFunc m = at(r0, c0) * at(r1, c1) - at(r0, c1) * at(r1, c0);
      return ((i + j) % 2 == 0) ? m : -m;
    };
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.at(j, i) = minor(i, j);
    return r;
  }
  throw Error(Err::BadTransform, "adjugate: unsupported size");
}

MatrixRat MatrixRat::inverse() const {
  RatFunc d = det();
  if (d.is_zero()) throw Error(Err::SingularGauge, "singular matrix");
  return adjugate().scaled(d.inv());
}

MatrixRat MatrixRat::map(const std::function<RatFunc(const RatFunc&)>& f) const {
  MatrixRat r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.at(i, j) = f(at(i, j));
  return r;
}

MatrixRat MatrixRat::substitute(const RatFunc::Bindings& b) const {
  return map([&](const RatFunc& f) { return f.substitute(b); });
}

MatrixRat MatrixRat::diff_spectral(Sym s) const {
  return map([&](const RatFunc& f) { return f.diff_spectral(s); });
}

MatrixRat MatrixRat::diff_t(const DerivationTable& t) const {
  return map([&](const RatFunc& f) { return f.diff_t(t); });
}

}  // namespace fg
