#pragma once

#include <functional>

#include "fgpair/pair.hpp"

namespace fg {

using RouteOp = std::function<FGPair(const FGPair&)>;
using Route = std::vector<RouteOp>;

FGPair run_route(const Route& route, FGPair start);

// True iff both routes, started from the same pair, land on identical pairs.
bool diagram_check(const Route& a, const Route& b, const FGPair& start);

// The two compositions JM2 -> HTW through the 3x3 systems, in the theta
// parametrization (kappa2 = -1, kappa1 = theta - 1 on the upper branch).
Route figure2_upper_route();
Route figure2_lower_route();

struct EdgeReport {
  std::string name;
  bool pass;
  std::string note;
};

std::vector<EdgeReport> run_figure1();
std::vector<EdgeReport> run_figure2();

}  // namespace fg
