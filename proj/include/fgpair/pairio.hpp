#pragma once

#include <string>
#include <string_view>

#include "fgpair/pair.hpp"

namespace fg {

// Pair-catalog file format: header (name, spectral symbol, size, optional
// alpha formula and parameter constraints), the four matrices in the
// expression grammar, then the derivation table.  serialize/parse round-trip
// bit-exactly on canonical forms.
std::string serialize_pair(const FGPair& p);
FGPair parse_pair(std::string_view text);

FGPair load_pair_file(const std::string& path);
void save_pair_file(const FGPair& p, const std::string& path);

}  // namespace fg
