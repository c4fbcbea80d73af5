#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "fgpair/rational.hpp"

namespace fg {

enum class SymKind : uint8_t { Spectral, Dependent, Time, Parameter };

// Fixed global registry.  Every symbol that appears in any cataloged
// equation is registered here exactly once, in the monomial-order priority
// used throughout: spectral > dependent > t > parameters.
using Sym = int;

inline constexpr int kSymCount = 20;

struct SymbolInfo {
  const char* name;
  SymKind kind;
};

const std::array<SymbolInfo, kSymCount>& symbol_table();

Sym sym(std::string_view name);              // throws ParseError if unknown
const char* sym_name(Sym s);
SymKind sym_kind(Sym s);
bool sym_exists(std::string_view name);

// Well-known indices, resolved once.
namespace S {
Sym lambda();
Sym mu();
Sym zeta();
Sym y();
Sym yp();
Sym z();
Sym zp();
Sym u();
Sym w();
Sym f0();
Sym f1();
Sym q();
Sym V();
Sym t();
Sym theta();
Sym alpha();
Sym alpha0();
Sym alpha1();
Sym kappa1();
Sym kappa2();
}  // namespace S

}  // namespace fg
