#include "fgpair/num/ode.hpp"

#include <algorithm>
#include <cmath>

namespace fg::num {

namespace {

// Dormand-Prince 5(4) tableau
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;

}  // namespace

OdeResult integrate_ode(const Rhs& f, std::vector<C> y, double s0, double s1,
                        const OdeOptions& opt, const std::vector<int>& groups,
                        const StepObserver& observer) {
  const size_t n = y.size();
  const double dir = (s1 >= s0) ? 1.0 : -1.0;
  const double span = std::abs(s1 - s0);
  if (span == 0.0) return {std::move(y), 0, 0};

  int ngroups = 1;
  std::vector<int> gid(n, 0);
  if (!groups.empty()) {
    gid = groups;
    for (int g : gid) ngroups = std::max(ngroups, g + 1);
  }

  std::vector<C> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), tmp(n), ynew(n);
  double s = s0;
  f(s, y, k1);

  double h = opt.initial_step;
  if (h == 0.0) {
    double scale = 0.0;
    for (size_t i = 0; i < n; ++i)
      scale = std::max(scale, std::abs(k1[i]) / (1.0 + std::abs(y[i])));
    h = std::min(span, 0.01 / (scale + 1e-12));
  }
  h = std::min(h, span);

  OdeResult res;
  const double hmin = span * 1e-15;
  if (observer) observer(s, y);

  while (dir * (s1 - s) > 0) {
    if (res.steps++ > opt.max_steps)
      throw Error(Err::StepFailure, "ODE step limit exceeded near s=" + std::to_string(s));
    h = std::min(h, std::abs(s1 - s));
    double hd = dir * h;

    for (size_t i = 0; i < n; ++i) tmp[i] = y[i] + hd * a21 * k1[i];
    f(s + c2 * hd, tmp, k2);
    for (size_t i = 0; i < n; ++i) tmp[i] = y[i] + hd * (a31 * k1[i] + a32 * k2[i]);
    f(s + c3 * hd, tmp, k3);
    for (size_t i = 0; i < n; ++i) tmp[i] = y[i] + hd * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    f(s + c4 * hd, tmp, k4);
    for (size_t i = 0; i < n; ++i)
      tmp[i] = y[i] + hd * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    f(s + c5 * hd, tmp, k5);
    for (size_t i = 0; i < n; ++i)
      tmp[i] = y[i] + hd * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    f(s + hd, tmp, k6);
    for (size_t i = 0; i < n; ++i)
      ynew[i] = y[i] + hd * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    f(s + hd, ynew, k7);

    std::vector<double> gnorm(ngroups, 0.0);
    for (size_t i = 0; i < n; ++i)
      gnorm[gid[i]] = std::max(gnorm[gid[i]], std::max(std::abs(y[i]), std::abs(ynew[i])));

    double err = 0.0;
    for (size_t i = 0; i < n; ++i) {
      C ei = hd * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
      double floor_g = (gid[i] < int(opt.abs_floor.size())) ? opt.abs_floor[gid[i]] : 0.0;
      double sc = opt.rtol * (std::max(std::abs(y[i]), std::abs(ynew[i])) +
                              opt.group_floor * gnorm[gid[i]] + 1e-290) +
                  floor_g;
      double r = std::abs(ei) / sc;
      err += r * r;
    }
    err = std::sqrt(err / double(n));

    if (!std::isfinite(err)) {
      ++res.rejected;
      h *= 0.1;
      if (h < hmin)
        throw Error(Err::StepFailure, "non-finite state near s=" + std::to_string(s));
      continue;
    }
    if (err <= 1.0 || h <= hmin) {
      s += hd;
      y.swap(ynew);
      k1.swap(k7);  // FSAL
      if (observer) observer(s, y);
      double fac = (err > 0) ? 0.9 * std::pow(err, -0.2) : 5.0;
      h *= std::clamp(fac, 0.2, 5.0);
    } else {
      ++res.rejected;
      h *= std::clamp(0.9 * std::pow(err, -0.2), 0.1, 0.9);
      if (h < hmin)
        throw Error(Err::StepFailure, "ODE step underflow near s=" + std::to_string(s));
    }
  }
  res.y = std::move(y);
  return res;
}

}  // namespace fg::num
