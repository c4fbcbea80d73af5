#include "fgpair/symbols.hpp"

#include <sstream>

namespace fg {

const std::array<SymbolInfo, kSymCount>& symbol_table() {
  static const std::array<SymbolInfo, kSymCount> table = {{
      {"lambda", SymKind::Spectral},
      {"mu", SymKind::Spectral},
      {"zeta", SymKind::Spectral},
      {"y", SymKind::Dependent},
      {"yp", SymKind::Dependent},
      {"z", SymKind::Dependent},
      {"zp", SymKind::Dependent},
      {"u", SymKind::Dependent},
      {"w", SymKind::Dependent},
      {"f0", SymKind::Dependent},
      {"f1", SymKind::Dependent},
      {"q", SymKind::Dependent},
      {"V", SymKind::Dependent},
      {"t", SymKind::Time},
      {"theta", SymKind::Parameter},
      {"alpha", SymKind::Parameter},
      {"alpha0", SymKind::Parameter},
      {"alpha1", SymKind::Parameter},
      {"kappa1", SymKind::Parameter},
      {"kappa2", SymKind::Parameter},
  }};
  return table;
}

Sym sym(std::string_view name) {
  auto& tab = symbol_table();
  for (int i = 0; i < kSymCount; ++i)
    if (name == tab[i].name) return i;
  throw Error(Err::ParseError, "unknown symbol: " + std::string(name));
}

bool sym_exists(std::string_view name) {
  auto& tab = symbol_table();
  for (int i = 0; i < kSymCount; ++i)
    if (name == tab[i].name) return true;
  return false;
}

const char* sym_name(Sym s) { return symbol_table()[s].name; }
SymKind sym_kind(Sym s) { return symbol_table()[s].kind; }

namespace S {
Sym lambda() { return 0; }
Sym mu() { return 1; }
Sym zeta() { return 2; }
Sym y() { return 3; }
Sym yp() { return 4; }
Sym z() { return 5; }
Sym zp() { return 6; }
Sym u() { return 7; }
Sym w() { return 8; }
Sym f0() { return 9; }
Sym f1() { return 10; }
Sym q() { return 11; }
Sym V() { return 12; }
Sym t() { return 13; }
Sym theta() { return 14; }
Sym alpha() { return 15; }
Sym alpha0() { return 16; }
Sym alpha1() { return 17; }
Sym kappa1() { return 18; }
Sym kappa2() { return 19; }
}  // namespace S

std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::string GRat::str() const {
  if (im == 0) return rat_str(re);
  std::string imag = (im == 1) ? "i" : (im == -1 ? "-i" : rat_str(im) + "*i");
  if (re == 0) return imag;
  if (im > 0) return "(" + rat_str(re) + "+" + (im == 1 ? "i" : rat_str(im) + "*i") + ")";
  Rat mi = -im;
  return "(" + rat_str(re) + "-" + (mi == 1 ? "i" : rat_str(mi) + "*i") + ")";
}

}  // namespace fg
