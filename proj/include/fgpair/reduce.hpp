#pragma once

#include "fgpair/pair.hpp"

namespace fg {

// Result of eliminating one component through an algebraic row of the
// spectral equation: the component `eliminated` (1-based) satisfies
// Psi_e = sum_j relation[j] * Psi_j over the surviving components, and the
// survivors satisfy `pair`.
struct ReduceResult {
  FGPair pair;
  int eliminated = 0;
  std::vector<RatFunc> relation;  // indexed by surviving slots, in order
};

// row is 1-based; that row of L must vanish identically.  The eliminated
// component is the one whose constraint coefficient is a nonzero constant
// times a power of the spectral symbol, lowest power preferred.
ReduceResult reduce_constraint_row(const FGPair& p, int row);

// Upper-left block restriction for pairs whose remaining columns decouple
// (all dropped-column entries must vanish identically in the kept rows).
FGPair block_restrict(const FGPair& p, int keep);

}  // namespace fg
