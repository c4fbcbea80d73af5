#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "fgpair/rational.hpp"

namespace fg::num {

using C = std::complex<double>;

// Adaptive Dormand-Prince 5(4) over complex state vectors, parametrized by a
// real path coordinate.  Error control is relative per component with a
// floor proportional to the infinity norm of the component's group (columns
// of a fundamental matrix form one group each; this keeps recessive columns
// accurate through dominance swings without absolute-tolerance poisoning).
struct OdeOptions {
  double rtol = 1e-10;
  double group_floor = 1e-3;  // fraction of the group norm entering the scale
  long max_steps = 4000000;
  double initial_step = 0.0;          // 0: automatic
  std::vector<double> abs_floor{};    // optional absolute scale floor per group;
                                      // keep 0 for fundamental-matrix columns
};

using Rhs = std::function<void(double, const std::vector<C>&, std::vector<C>&)>;
using StepObserver = std::function<void(double, const std::vector<C>&)>;

struct OdeResult {
  std::vector<C> y;
  long steps = 0;
  long rejected = 0;
};

OdeResult integrate_ode(const Rhs& f, std::vector<C> y0, double s0, double s1,
                        const OdeOptions& opt, const std::vector<int>& groups = {},
                        const StepObserver& observer = nullptr);

}  // namespace fg::num
