#pragma once

#include <vector>

#include "fgpair/num/ode.hpp"

namespace fg::num {

// Piecewise polar path in the lambda plane.  Angles are branch angles
// (continuous, not reduced mod 2pi), so log lambda is well defined along
// the path.
struct Leg {
  enum class Kind { Radial, Arc } kind;
  double angle = 0.0;   // Radial: fixed angle
  double r0 = 0.0, r1 = 0.0;  // Radial: radius range
  double radius = 0.0;  // Arc: fixed radius
  double a0 = 0.0, a1 = 0.0;  // Arc: angle range

  double length() const;
};

struct PathPoint {
  C lambda;
  C dlambda;   // d lambda / d sigma
  double r;
  double ang;  // branch angle
};

struct Path {
  std::vector<Leg> legs;

  double length() const;
  PathPoint at(double sigma) const;
  double locate_radius_on_leg(size_t leg, double r) const;  // sigma of |lambda|=r
};

Path ray_then_arc_then_ray(double r_outer, double ang_in, double ang_out, double r_arc);

// Appendix-style integration contour for the lambda-plane transform.
struct Contour {
  int k = 0;
  double eps = 0.0;
  double r_trunc = 0.0;
  double arc_radius = 1.0;
  bool split = false;
  Path col[2];          // per-column paths; equal unless split
  double ray_in = 0.0;  // asymptotic angles (standard variant)
  double ray_out = 0.0;
};

// Admissible sector index for a given arg mu (branch value), if any.
bool admissible_k(double arg_mu, double eps, int& k_out);

// Standard contour: rays at pi/6 + 2 pi k/3 - eps and pi/2 + 2 pi k/3 + eps
// joined by an arc of radius arc_radius, truncated at r_trunc.  Throws
// MuOutsideWedge unless arg_mu lies strictly inside the admissible wedge of
// sector k, and BadOpening unless 0 < eps < pi/3.
Contour build_contour(int k, double eps, double r_trunc, double arg_mu);

// Split contour for arg mu on the anti-Stokes boundary (arg mu = pi):
// column 1 runs from direction 2pi/3 to 0, column 2 from 4pi/3 to 2pi.
Contour build_split_contour(double r_trunc);

}  // namespace fg::num
