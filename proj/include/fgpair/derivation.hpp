#pragma once

#include <map>
#include <optional>

#include "fgpair/ratfunc.hpp"

namespace fg {

// The nonlinear t-flow as rewrite rules: each dependent symbol maps to its
// t-derivative.  Parameter constraints (e.g. kappa2 -> -1) ride along as
// data; they are applied by the pair layer, not by diff_t.
class DerivationTable {
 public:
  DerivationTable() = default;

  void set(Sym dep, RatFunc rhs) { rules_[dep] = std::move(rhs); }
  bool has(Sym dep) const { return rules_.count(dep) != 0; }
  const RatFunc& rule(Sym dep) const;
  const std::map<Sym, RatFunc>& rules() const { return rules_; }

  void constrain(Sym param, RatFunc value) { constraints_[param] = std::move(value); }
  const std::map<Sym, RatFunc>& constraints() const { return constraints_; }

  DerivationTable substituted(const RatFunc::Bindings& b) const;

  friend bool operator==(const DerivationTable& a, const DerivationTable& b) {
    return a.rules_ == b.rules_ && a.constraints_ == b.constraints_;
  }

 private:
  std::map<Sym, RatFunc> rules_;
  std::map<Sym, RatFunc> constraints_;
};

}  // namespace fg
