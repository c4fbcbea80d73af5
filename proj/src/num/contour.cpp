#include "fgpair/num/contour.hpp"

#include <cmath>

namespace fg::num {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kHalfPi = kPi / 2;
}

double Leg::length() const {
  if (kind == Kind::Radial) return std::abs(r1 - r0);
  return radius * std::abs(a1 - a0);
}

double Path::length() const {
  double L = 0.0;
  for (auto& l : legs) L += l.length();
  return L;
}

PathPoint Path::at(double sigma) const {
  double s = sigma;
  for (size_t i = 0; i < legs.size(); ++i) {
    const Leg& l = legs[i];
    double len = l.length();
    if (s > len && i + 1 < legs.size()) {
      s -= len;
      continue;
    }
    PathPoint p;
    if (l.kind == Leg::Kind::Radial) {
      double dir = (l.r1 >= l.r0) ? 1.0 : -1.0;
      p.r = l.r0 + dir * s;
      p.ang = l.angle;
      p.lambda = std::polar(p.r, p.ang);
      p.dlambda = std::polar(dir, p.ang);
    } else {
      double dir = (l.a1 >= l.a0) ? 1.0 : -1.0;
      p.ang = l.a0 + dir * s / l.radius;
      p.r = l.radius;
      p.lambda = std::polar(l.radius, p.ang);
      p.dlambda = std::polar(1.0, p.ang + dir * kHalfPi);  // unit speed along the arc
    }
    return p;
  }
  throw Error(Err::QuadratureFailure, "path parameter out of range");
}

double Path::locate_radius_on_leg(size_t leg, double r) const {
  double base = 0.0;
  for (size_t i = 0; i < leg; ++i) base += legs[i].length();
  const Leg& l = legs[leg];
  if (l.kind != Leg::Kind::Radial) throw Error(Err::QuadratureFailure, "not a radial leg");
  return base + std::abs(r - l.r0);
}

Path ray_then_arc_then_ray(double r_outer, double ang_in, double ang_out, double r_arc) {
  Path p;
  p.legs.push_back({Leg::Kind::Radial, ang_in, r_outer, r_arc, 0, 0, 0});
  Leg arc;
  arc.kind = Leg::Kind::Arc;
  arc.radius = r_arc;
  arc.a0 = ang_in;
  arc.a1 = ang_out;
  p.legs.push_back(arc);
  p.legs.push_back({Leg::Kind::Radial, ang_out, r_arc, r_outer, 0, 0, 0});
  return p;
}

bool admissible_k(double arg_mu, double eps, int& k_out) {
  // pi/3 + eps < arg_mu + 2 pi k/3 < pi - eps for some integer k
  double lo = (kPi / 3 + eps - arg_mu) * 3.0 / (2.0 * kPi);
  double hi = (kPi - eps - arg_mu) * 3.0 / (2.0 * kPi);
  int k = int(std::ceil(lo));
  if (double(k) > lo && double(k) < hi) {
    k_out = k;
    return true;
  }
  return false;
}

Contour build_contour(int k, double eps, double r_trunc, double arg_mu) {
  if (!(eps > 0.0 && eps < kPi / 3)) throw Error(Err::BadOpening, "opening must lie in (0, pi/3)");
  if (r_trunc <= 0.0) throw Error(Err::BadOpening, "truncation radius must be positive");
  double shifted = arg_mu + 2.0 * kPi * k / 3.0;
  if (!(shifted > kPi / 3 + eps && shifted < kPi - eps)) {
    int good;
    std::string hint = admissible_k(arg_mu, eps, good)
                           ? (" (admissible k = " + std::to_string(good) + " + 3m)")
                           : " (no admissible sector at this opening)";
    throw Error(Err::MuOutsideWedge,
                "arg mu outside the wedge of sector k=" + std::to_string(k) + hint);
  }
  Contour c;
  c.k = k;
  c.eps = eps;
  c.r_trunc = r_trunc;
  c.arc_radius = std::min(1.0, r_trunc / 2);
  c.ray_in = kPi / 6 + 2.0 * kPi * k / 3.0 - eps;
  c.ray_out = kPi / 2 + 2.0 * kPi * k / 3.0 + eps;
  c.col[0] = ray_then_arc_then_ray(r_trunc, c.ray_in, c.ray_out, c.arc_radius);
  c.col[1] = c.col[0];
  return c;
}

Contour build_split_contour(double r_trunc) {
  if (r_trunc <= 0.0) throw Error(Err::BadOpening, "truncation radius must be positive");
  Contour c;
  c.split = true;
  c.r_trunc = r_trunc;
  c.arc_radius = std::min(1.0, r_trunc / 2);
  // anti-Stokes rays: column 1 from 2pi/3 down to 0, column 2 from 4pi/3 up
  // to 2pi; both end along the positive real direction
  c.col[0] = ray_then_arc_then_ray(r_trunc, 2.0 * kPi / 3, 0.0, c.arc_radius);
  c.col[1] = ray_then_arc_then_ray(r_trunc, 4.0 * kPi / 3, 2.0 * kPi, c.arc_radius);
  return c;
}

}  // namespace fg::num
