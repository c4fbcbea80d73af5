#pragma once

#include <array>

#include "fgpair/num/canonical.hpp"

namespace fg::num {

// Stokes multipliers s_1..s_6 of the JM2 spectral equation, extracted from
// consecutive canonical solutions.  Odd-index matrices are upper-triangular
// unipotent, even lower; the product S1...S6 equals the formal monodromy
// factor exp(-2 pi i theta sigma3).
struct StokesData {
  std::array<C, 6> s{};
  std::array<M2, 6> S{};
  double template_residual = 0.0;  // worst off-template entry
  double product_residual = 0.0;   // ||S1...S6 - exp(-2 pi i theta sigma3)||_F
  M2 formal_monodromy{};
};

StokesData stokes_matrices(const P2State& s, double tol, double seed_radius = 8.0,
                           int series_terms = 24);

// Airy-branch oracle at theta = 0: the flow state generated by
// v(t) = Ai(c t), c = 2^{-1/3} e^{-i pi/3} (so y = -v'/v, z = 0, u = v), and
// the predicted multipliers (s2 = s4 = s6 = 0, s5 = 0 for this branch,
// s1/s3 from Wronskians of rotated Airy evaluations).
P2State airy_branch_state(double t);
std::array<C, 6> airy_oracle_multipliers(double t);

}  // namespace fg::num
