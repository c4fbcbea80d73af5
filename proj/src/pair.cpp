#include "fgpair/pair.hpp"

namespace fg {

MatrixRat FGPair::solved_A() const {
  RatFunc d = L.det();
  if (d.is_zero()) throw Error(Err::DegeneratePair, name + ": det L == 0, no solved form");
  return L.inverse() * R;
}

MatrixRat FGPair::solved_U() const {
  if (T1.is_zero()) return T0;
  return T0 + T1.scaled(RatFunc::var(spectral)) * solved_A();
}

FGPair FGPair::substituted(const RatFunc::Bindings& b) const {
  FGPair p = *this;
  p.L = L.substitute(b);
  p.R = R.substitute(b);
  p.T1 = T1.substitute(b);
  p.T0 = T0.substitute(b);
  p.table = table.substituted(b);
  if (alpha_formula) p.alpha_formula = alpha_formula->substitute(b);
  return p;
}

FGPair FGPair::constrained() const {
  if (table.constraints().empty()) return *this;
  RatFunc::Bindings b;
  for (auto& [s, v] : table.constraints()) b[s] = v;
  FGPair p = substituted(b);
  p.name = name;
  return p;
}

// Row-canonical presentation of the spectral equation: each row of [L | R]
// is cleared of denominators, divided by the content over all entries, and
// scaled so the first nonzero entry has leading coefficient 1.
static std::vector<std::vector<RatFunc>> spectral_rows_canonical(const FGPair& p) {
  int n = p.size();
  std::vector<std::vector<RatFunc>> rows(n);
  for (int i = 0; i < n; ++i) {
    std::vector<RatFunc> row;
    for (int j = 0; j < n; ++j) row.push_back(p.L.at(i, j));
    for (int j = 0; j < n; ++j) row.push_back(p.R.at(i, j));
    Poly denom(GRat(1));
    for (auto& f : row) denom = Poly::divexact(denom * f.den(), Poly::gcd(denom, f.den()));
    Poly content;
    std::vector<Poly> nums;
    for (auto& f : row) {
      Poly q = f.num() * Poly::divexact(denom, f.den());
      content = content.is_zero() ? q : Poly::gcd(content, q);
      nums.push_back(std::move(q));
    }
    if (content.is_zero()) {
      rows[i].assign(2 * n, RatFunc());
      continue;
    }
    GRat lead;
    for (auto& q : nums)
      if (!q.is_zero()) {
        Poly red = Poly::divexact(q, content);
        lead = red.leading_coeff();
        break;
      }
    for (auto& q : nums) {
      Poly red = q.is_zero() ? q : Poly::divexact(q, content);
      rows[i].push_back(RatFunc(red.scaled(lead.inv())));
    }
  }
  return rows;
}

bool pair_equal(const FGPair& a, const FGPair& b) {
  if (a.spectral != b.spectral || a.size() != b.size()) return false;
  bool adeg = a.degenerate(), bdeg = b.degenerate();
  if (adeg != bdeg) return false;
  if (!adeg) {
    if (!(a.solved_A() == b.solved_A())) return false;
    if (!(a.solved_U() == b.solved_U())) return false;
    return true;
  }
  if (spectral_rows_canonical(a) != spectral_rows_canonical(b)) return false;
  return a.T1 == b.T1 && a.T0 == b.T0;
}

}  // namespace fg
