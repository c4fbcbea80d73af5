#pragma once

#include "fgpair/num/evalpair.hpp"

namespace fg::num {

// State of the three-function flow behind the second Painleve equation:
//   y' = y^2 + z + t/2,   z' = -2 y z - theta,   u' = -y u.
// The auxiliary relation z = y' - y^2 - t/2 holds along trajectories.
struct P2State {
  double t = 0.0;
  C y{}, z{}, u{1.0, 0.0};
  C theta{};

  C yprime() const { return y * y + z + t / 2.0; }
};

P2State integrate_p2(const P2State& s0, double t_end, double tol);

// The closed-form branch y == 0, z = -t/2, u = 1 at theta = 1/2.
P2State y_zero_branch(double t);

SymVals state_symvals(const P2State& s);

}  // namespace fg::num
