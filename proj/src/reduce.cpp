#include "fgpair/reduce.hpp"

namespace fg {

ReduceResult reduce_constraint_row(const FGPair& p, int row) {
  int n = p.size(), r = row - 1;
  if (r < 0 || r >= n) throw Error(Err::RowNotAlgebraic, "row out of range");
  for (int j = 0; j < n; ++j)
    if (!p.L.at(r, j).is_zero())
      throw Error(Err::RowNotAlgebraic, "row carries spectral derivatives");

  // normalized constraint coefficients: clear denominators and content
  std::vector<RatFunc> c(n);
  {
    Poly denom(GRat(1));
    for (int j = 0; j < n; ++j) {
      const Poly& d = p.R.at(r, j).den();
      denom = Poly::divexact(denom * d, Poly::gcd(denom, d));
    }
    Poly content;
    std::vector<Poly> nums(n);
    for (int j = 0; j < n; ++j) {
      nums[j] = p.R.at(r, j).num() * Poly::divexact(denom, p.R.at(r, j).den());
      if (!nums[j].is_zero())
        content = content.is_zero() ? nums[j] : Poly::gcd(content, nums[j]);
    }
    if (content.is_zero()) throw Error(Err::RowNotAlgebraic, "row is identically zero");
    for (int j = 0; j < n; ++j) c[j] = RatFunc(Poly::divexact(nums[j], content));
  }

  // eliminated component: coefficient of the form const * s^k, smallest k
  Sym s = p.spectral;
  int e = -1, best_k = -1;
  for (int j = 0; j < n; ++j) {
    if (c[j].is_zero() || !c[j].den().is_one()) continue;
    const Poly& num = c[j].num();
    if (num.terms().size() != 1) continue;
    const Mono& m = num.terms().begin()->first;
    int k = m.e[s];
    bool pure = true;
    for (int q = 0; q < kSymCount; ++q)
      if (q != s && m.e[q]) pure = false;
    if (!pure) continue;
    if (e < 0 || k < best_k) {
      e = j;
      best_k = k;
    }
  }
  if (e < 0) throw Error(Err::RowNotAlgebraic, "no constant-coefficient component to eliminate");

  std::vector<int> keep;
  for (int j = 0; j < n; ++j)
    if (j != e) keep.push_back(j);

  std::vector<RatFunc> g(n);  // Psi_e = sum g_j Psi_j
  for (int j : keep) g[j] = -c[j] / c[e];

  int m = n - 1;
  FGPair out = p;
  out.name = p.name + "/reduced";
  out.L = MatrixRat(m);
  out.R = MatrixRat(m);
  out.T1 = MatrixRat(m);
  out.T0 = MatrixRat(m);
  RatFunc sv = RatFunc::var(s);

  int io = 0;
  for (int i = 0; i < n; ++i) {
    if (i == r) continue;
    for (int jo = 0; jo < m; ++jo) {
      int j = keep[jo];
      RatFunc gp = g[j].diff_spectral(s);
      out.L.at(io, jo) = p.L.at(i, j) + p.L.at(i, e) * g[j];
      out.R.at(io, jo) = p.R.at(i, j) + p.R.at(i, e) * g[j] - p.L.at(i, e) * gp;
    }
    ++io;
  }
  io = 0;
  for (int i = 0; i < n; ++i) {
    if (i == e) continue;
    for (int jo = 0; jo < m; ++jo) {
      int j = keep[jo];
      RatFunc gp = g[j].diff_spectral(s);
      out.T1.at(io, jo) = p.T1.at(i, j) + p.T1.at(i, e) * g[j];
      out.T0.at(io, jo) = p.T0.at(i, j) + p.T0.at(i, e) * g[j] + sv * p.T1.at(i, e) * gp;
    }
    ++io;
  }

  ReduceResult res;
  res.pair = std::move(out);
  res.eliminated = e + 1;
  for (int j : keep) res.relation.push_back(g[j]);
  return res;
}

FGPair block_restrict(const FGPair& p, int keep) {
  int n = p.size();
  MatrixRat A = p.solved_A();
  MatrixRat U = p.solved_U();
  for (int i = 0; i < keep; ++i)
    for (int j = keep; j < n; ++j) {
      if (!A.at(i, j).is_zero())
        throw Error(Err::BadTransform, "spectral block does not decouple");
      if (!U.at(i, j).is_zero())
        throw Error(Err::BadTransform, "t-equation block does not decouple");
    }
  FGPair out = p;
  out.name = p.name + "/block";
  out.L = MatrixRat::identity(keep);
  out.R = MatrixRat(keep);
  out.T1 = MatrixRat(keep);
  out.T0 = MatrixRat(keep);
  for (int i = 0; i < keep; ++i)
    for (int j = 0; j < keep; ++j) {
      out.R.at(i, j) = A.at(i, j);
      out.T0.at(i, j) = U.at(i, j);
    }
  return out;
}

}  // namespace fg
