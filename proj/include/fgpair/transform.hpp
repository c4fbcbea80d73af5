#pragma once

#include <variant>
#include <vector>

#include "fgpair/pair.hpp"

namespace fg {

// Transform primitives.  Each step maps the pair satisfied by Psi_old to
// the pair satisfied by Psi_new, with Psi_old = factor * Psi_new:
//
//   Gauge          Psi_old = G(s,t) Psi_new
//   ExpTwist       Psi_old = exp(f(s,t)) Psi_new
//   PowerTwist     Psi_old = s^p Psi_new            (p parameter-valued)
//   Sigma3Power    Psi_old = b^{q sigma3} Psi_new   (2x2; b = spectral symbol
//                                                    or a dependent symbol;
//                                                    2q must be an integer
//                                                    when b is spectral)
//   Substitute     s_old = c * s_new^2  or  s_old = -s_new
//
// Composition order is right-to-left on solutions: a spec [P1, P2] means
// Psi_old = P1-factor * P2-factor * Psi_final.
struct Gauge {
  MatrixRat G;
};
struct ExpTwist {
  RatFunc f;
};
struct PowerTwist {
  RatFunc p;
};
struct Sigma3Power {
  Sym base;
  Rat q;
};
struct Substitute {
  Sym from;    // spectral symbol of the pair being transformed
  Sym to;      // new spectral symbol
  GRat c;      // from = c * to^2, or
  bool quad;   // quad=false: from = -to with from == to (reflection)
};
// Inverse of a quadratic Substitute: rebuilds the pair in `to` with
// to = c * from^2.  Fails with NonInvertibleSubstitution when the current
// pair has no quadratic preimage (odd parity parts present).
struct Desubstitute {
  Sym from;
  Sym to;
  GRat c;
};

using TransformStep =
    std::variant<Gauge, ExpTwist, PowerTwist, Sigma3Power, Substitute, Desubstitute>;

struct TransformSpec {
  std::vector<TransformStep> steps;

  static TransformSpec identity() { return {}; }
  TransformSpec then(const TransformSpec& next) const;
  TransformSpec inverse() const;
};

FGPair apply_transform(const FGPair& p, const TransformSpec& spec);

// Pair-level symmetry: transforming by (s -> -s, gauge) returns the pair
// unchanged iff solutions map to solutions times a constant matrix.
bool check_symmetry(const FGPair& p, const MatrixRat& gauge);

// Built-in specs for the cataloged maps.
//   fabri_p1:      JM1  -> JM1F
//   fabri_htw_fn:  HTW  -> FN            (z and alpha identifications apply)
//   cm2_to_jm2:    CM2  -> JM2
//   u_gauge:       JKT2phi -> (cubic-twisted JM2 stage)
//   cubic_twist:   removes exp(-(lambda^3/3 + lambda t/2))
//   chi_gauge:     dJKT2_2 -> dJKT2_2chi
//   htw_gauge:     dJKT2_2psi -> HTW
//   psi_twist:     dJKT2_3psi -> HTW     (power twist mu^(-1 + theta/2))
TransformSpec named_transform(const std::string& name);
std::vector<std::string> transform_names();

}  // namespace fg
