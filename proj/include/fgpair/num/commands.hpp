#pragma once

#include <optional>

#include "fgpair/num/report.hpp"
#include "fgpair/num/transform31.hpp"

namespace fg::num {

// Command implementations behind the CLI, exposed for the test suite.

Report run_verify(const std::vector<std::string>& pair_names);
Report run_diagram(int figure);

struct TheoremConfig {
  C theta{0.5, 0.0};
  double t = 1.0;
  std::vector<C> mu;          // >= 1 entries; arg taken from the first
  std::vector<double> arg_mu;
  double eps = 0.2617993877991494;  // pi/12
  double r_trunc = 6.0;
  std::optional<int> k;
  double tol = 1e-10;
  double acc_tol = 1e-6;
  double t_second = 1.4;
  bool corrupt_kernel = false;  // self-test negative control
  std::string branch = "auto";  // auto | yzero | airy | flow
};

Report run_theorem31(const TheoremConfig& cfg);
Report run_stokes(const TheoremConfig& cfg, double drift_t2 = 1.5);

// Flow state selection shared by the numeric commands.
P2State select_state(const TheoremConfig& cfg);

// Plain numeric table of contour samples for external plotting.
std::string plot_export(const TheoremConfig& cfg);

// Complex literals of the CLI: a+bi forms and r*exp(i*theta) forms, with pi.
C parse_complex(const std::string& text);

}  // namespace fg::num
