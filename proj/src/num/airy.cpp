#include "fgpair/num/airy.hpp"

namespace fg::num {

namespace {
// Ai(0) and -Ai'(0)
constexpr double kC1 = 0.35502805388781723926;
constexpr double kC2 = 0.25881940379280679841;
}  // namespace

// f(z) = sum 3^k (1/3)_k z^{3k} / (3k)!,  g(z) = sum 3^k (2/3)_k z^{3k+1} / (3k+1)!
// Ai = c1 f - c2 g; both satisfy w'' = z w.
static void airy_series(C z, C& ai, C& aip) {
  C z3 = z * z * z;
  C f = 1.0, fterm = 1.0;
  C g = z, gterm = z;
  C fp = 0.0, fpterm = z * z / 2.0;
  C gp = 1.0, gpterm = 1.0;
  fp += fpterm;
  for (int k = 1; k < 80; ++k) {
    fterm *= z3 / double(3 * k * (3 * k - 1));
    gterm *= z3 / double(3 * k * (3 * k + 1));
    gpterm *= z3 / double(3 * k * (3 * k - 2));
    if (k >= 2) fpterm *= z3 / double((3 * k - 1) * (3 * k - 3));
    f += fterm;
    g += gterm;
    gp += gpterm;
    if (k >= 2) fp += fpterm;
    if (std::abs(fterm) < 1e-20 && std::abs(gterm) < 1e-20) break;
  }
  ai = kC1 * f - kC2 * g;
  aip = kC1 * fp - kC2 * gp;
}

C airy_ai(C z) {
  C ai, aip;
  airy_series(z, ai, aip);
  return ai;
}

C airy_ai_prime(C z) {
  C ai, aip;
  airy_series(z, ai, aip);
  return aip;
}

}  // namespace fg::num
