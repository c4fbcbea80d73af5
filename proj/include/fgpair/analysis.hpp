#pragma once

#include "fgpair/pair.hpp"

namespace fg {

// Zero-curvature residual dA/dt - dU/ds + [A, U] for a nondegenerate pair,
// with A = L^{-1} R and U = T0 + T1 * s * A.  The zero matrix certifies
// compatibility; throws DegeneratePair when det L == 0.
MatrixRat compatibility_residual(const FGPair& p);

// Reduces the table's coupled first-order flow to a single second-order
// equation: returns E with target'' = E(target, target', t, parameters).
// The first derivative enters as the registered symbol yp (for y) or zp
// (for z).
RatFunc eliminate_to_scalar(const DerivationTable& table, Sym target);

// Scalar reduction of a 2x2 pair: the chosen component divided by the twist
// w (with the active relation w^2 = rel) satisfies V'' = potential * V plus
// a first-order t-equation.  component is 1-based.
ScalarPair scalar_reduce(const FGPair& p, int component, const Extension& twist);

// Checks the symmetric-variable parametrization of the HTW flow:
// f0 = z + 2y^2 + t, f1 = -z, q = -y with alpha0 = 1 - theta, alpha1 = theta.
bool symmetric_variables_check(const DerivationTable& table);

}  // namespace fg
