#pragma once

#include "fgpair/num/contour.hpp"
#include "fgpair/num/evalpair.hpp"
#include "fgpair/num/p2flow.hpp"

namespace fg::num {

// The JM2 pair compiled for float evaluation at a fixed flow state.
struct JM2System {
  CompiledMatrix A;  // spectral-equation coefficient
  CompiledMatrix U;  // t-equation coefficient
  SymVals base;

  static JM2System make(const P2State& s);
  M2 evalA(C lambda) const;
  M2 evalU(C lambda) const;
};

// Irregular exponent Q(lambda) = lambda^3/3 + lambda t/2 - theta log lambda,
// evaluated on the branch fixed by the continuous path angle.
C q_exponent(const P2State& s, double r, double ang);

// Coefficients Y_k of the formal expansion (I + sum Y_k lambda^-k) e^{Q sigma3}.
struct AsymptoticSeries {
  std::vector<M2> Yk;
  M2 prefactor(C lambda) const;
};

AsymptoticSeries jm2_series(const P2State& s, int terms);

// Truncated-series value of the canonical solution at radius/branch-angle.
M2 canonical_seed(const P2State& s, const AsymptoticSeries& series, double radius, double ang);

// Propagate a fundamental matrix of the JM2 spectral equation along a path.
M2 propagate(const JM2System& sys, M2 Y, const Path& path, double s_from, double s_to,
             double tol);

double sector_center(int n);  // pi/6 + pi (n - 1)/3

// Canonical solution Y_n evaluated at (radius, to_angle) after seeding on the
// central ray of sector n and sweeping the arc.
M2 canonical_at(const JM2System& sys, const P2State& s, const AsymptoticSeries& series,
                int sector, double radius, double to_angle, double tol);

// The public contour-borne canonical solution: seeds at |lambda| =
// seed_radius on the contour's incoming ray and integrates along the whole
// column path, recording samples.
struct CanonicalSolution {
  int sector = 0;
  double seed_radius = 0.0;
  double branch_angle = 0.0;  // branch angle at the seed point
  struct Sample {
    double sigma;
    C lambda;
    M2 Y;
  };
  std::vector<Sample> samples;
  M2 at_junction;  // value at the inner arc junction (well-conditioned point)
  M2 at_start;
  M2 end;
};

CanonicalSolution canonical_solution(const P2State& s, int sector, const Contour& contour,
                                     double seed_radius, double tol, int column = 0);

}  // namespace fg::num
