#pragma once

#include <string>
#include <string_view>

#include "fgpair/ratfunc.hpp"

namespace fg {

// Textual expression grammar shared by the pair-catalog files and the CLI:
// integers, `i`, registered symbol names, + - * / ^ and parentheses.
// print() emits canonical forms that parse() maps back to the same RatFunc.
RatFunc parse_ratfunc(std::string_view text);
std::string print_ratfunc(const RatFunc& f);
std::string print_poly(const Poly& p);

}  // namespace fg
