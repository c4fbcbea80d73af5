#pragma once

#include <string>
#include <vector>

#include "fgpair/rational.hpp"

namespace fg::num {

// Structured check report with a versioned text serialization.  Symbolic
// checks carry exact booleans ("exact-zero" residuals); numeric checks carry
// float residuals.  Timing is emitted only on demand so reports diff cleanly.
struct CheckRecord {
  std::string name;
  std::string kind;  // "symbolic" or "numeric"
  bool pass = false;
  std::string residual;  // "exact-zero" or a float literal
  std::string note;
  double seconds = 0.0;
};

struct Report {
  static constexpr int kSchemaVersion = 1;
  std::string command;
  std::vector<CheckRecord> records;

  bool all_pass() const;
  std::string serialize(bool with_timing = false) const;
  static Report parse(const std::string& text);
};

}  // namespace fg::num
