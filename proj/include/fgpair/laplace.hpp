#pragma once

#include "fgpair/pair.hpp"

namespace fg {

// Formal generalized Laplace transform with the symmetric kernel
// exp(lambda*mu): the lambda-side solution always sits inside the integral,
// the mu-side solution outside.  Applied to a pair in lambda this is the
// operator substitution (lambda .) -> d/dmu, d/dlambda -> (-mu .); applied
// to a pair in mu it is the inverse substitution (mu .) -> -d/dlambda,
// d/dmu -> (lambda .).  Because the kernel is symmetric the two enum values
// perform the same variable-directed map; the round-trip laws hold either
// way and are tested.
enum class LaplaceDirection { Forward, Inverse };

FGPair laplace(const FGPair& p, LaplaceDirection dir);

}  // namespace fg
