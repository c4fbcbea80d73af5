#pragma once

#include <optional>

#include "fgpair/num/canonical.hpp"

namespace fg::num {

struct TransformOptions {
  double tol = 1e-10;        // ODE / quadrature tolerance
  double eps = 0.2617993877991494;  // pi/12
  double r_trunc = 6.0;
  std::optional<int> k;      // sector index; auto-selected from arg mu when unset
  bool corrupt_kernel = false;  // negative control: flips the cubic kernel sign
};

// One evaluation of the lambda-plane transform: returns W(mu) together with
// the fundamental family used (Y seeded as the identity at the inner arc
// midpoint, which the transfer-matrix criterion is insensitive to).
struct TransformEval {
  M2 W;
  C mu;
  double arg_mu;
  double det_w;
};

TransformEval integral_transform(const P2State& s, const Contour& contour, C mu,
                                 double arg_mu, const TransformOptions& opt);

// Full validation: mu-transfer residual, t-transfer residual after advancing
// the flow, truncation-doubling delta, and the corrupted-kernel control.
struct Theorem31Report {
  double residual_mu = 0.0;
  double residual_t = 0.0;
  double r_double_delta = 0.0;
  double negative_control = 0.0;
  double det_w = 0.0;
  int k = 0;
  bool pass = false;
};

Theorem31Report verify_theorem31(const P2State& s, C mu1, C mu2, double arg_mu,
                                 const TransformOptions& opt, double acc_tol,
                                 double t_second = 0.0, bool with_controls = true);

// Transfer matrix of the HTW mu-equation between two points (straight
// segment), evaluated from the exact catalog at the given state.
M2 htw_transfer_mu(const P2State& s, C mu1, C mu2, double tol);

// Split-contour evaluation at arg mu = pi built from the second columns of
// the canonical solutions Y2 and Y4; valid when s3 != 0.
TransformEval integral_transform_split(const P2State& s, C mu, double arg_mu,
                                       const TransformOptions& opt);

}  // namespace fg::num
