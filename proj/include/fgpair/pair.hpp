#pragma once

#include <optional>
#include <string>

#include "fgpair/derivation.hpp"
#include "fgpair/matrix.hpp"

namespace fg {

// Generalized matrix Fuchs-Garnier pair
//
//   L(s,t) d/ds Psi = R(s,t) Psi
//   d/dt Psi = T1(s,t) * s * d/ds Psi + T0(s,t) Psi
//
// L may be singular (degenerate pairs); most catalog entries have T1 = 0.
struct FGPair {
  std::string name;
  Sym spectral = 0;
  MatrixRat L, R, T1, T0;
  DerivationTable table;
  std::optional<RatFunc> alpha_formula;  // induced parameter of the order-2 scalar form

  int size() const { return L.size(); }
  bool degenerate() const { return L.det().is_zero(); }

  // Solved coefficient of the spectral equation, A = L^{-1} R.
  MatrixRat solved_A() const;
  // Solved coefficient of the t-equation, U = T0 + T1 * s * A.
  MatrixRat solved_U() const;

  FGPair substituted(const RatFunc::Bindings& b) const;
  // Applies the table's recorded parameter constraints to all matrices.
  FGPair constrained() const;
};

// Canonical-form equality of two pairs as linear systems: identical spectral
// symbol and size, spectral equations equal up to row scaling, t-equations
// equal entry-wise (solved against the spectral equation when L is regular).
bool pair_equal(const FGPair& a, const FGPair& b);

// Second-order scalar pair  V'' = potential * V,  dV/dt = r1 dV/ds + r0 V.
struct ScalarPair {
  Sym spectral = 0;
  RatFunc potential;
  RatFunc r1, r0;

  friend bool operator==(const ScalarPair& a, const ScalarPair& b) {
    return a.spectral == b.spectral && a.potential == b.potential && a.r1 == b.r1 && a.r0 == b.r0;
  }
};

}  // namespace fg
