#include "fgpair/laplace.hpp"

namespace fg {

namespace {

// coefficient matrices of s^0 and s^1
void split_linear(const MatrixRat& m, Sym s, MatrixRat& c0, MatrixRat& c1) {
  int n = m.size();
  c0 = MatrixRat(n);
  c1 = MatrixRat(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const RatFunc& f = m.at(i, j);
      if (f.den().contains(s) || f.num().deg_in(s) > 1)
        throw Error(Err::NotLinearInSpectral, "entry not linear in the spectral symbol");
      c0.at(i, j) = f.coeff_in(s, 0);
      c1.at(i, j) = f.coeff_in(s, 1);
    }
}

// Gaussian elimination for M x = b over the rational-function field, any
// shape; free variables set to zero; returns false when inconsistent.
bool gauss_solve(std::vector<std::vector<RatFunc>> M, std::vector<RatFunc> b,
                 std::vector<RatFunc>& x) {
  int rows = int(M.size());
  int cols = rows ? int(M[0].size()) : 0;
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pr = -1;
    for (int r = row; r < rows; ++r)
      if (!M[r][col].is_zero()) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(M[row], M[pr]);
    std::swap(b[row], b[pr]);
    RatFunc inv = M[row][col].inv();
    for (int j = col; j < cols; ++j) M[row][j] = M[row][j] * inv;
    b[row] = b[row] * inv;
    for (int r = 0; r < rows; ++r) {
      if (r == row || M[r][col].is_zero()) continue;
      RatFunc f = M[r][col];
      for (int j = col; j < cols; ++j) M[r][j] = M[r][j] - f * M[row][j];
      b[r] = b[r] - f * b[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (int r = row; r < rows; ++r)
    if (!b[r].is_zero()) return false;
  x.assign(cols, RatFunc());
  for (int r = 0; r < row; ++r) x[pivot_col[r]] = b[r];
  return true;
}

// Solve C A = S for C; returns false when inconsistent.
bool solve_left(const MatrixRat& A, const MatrixRat& S, MatrixRat& C) {
  int n = A.size();
  C = MatrixRat(n);
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<RatFunc>> M(n, std::vector<RatFunc>(n));
    std::vector<RatFunc> b(n), x;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) M[r][c] = A.at(c, r);
    for (int j = 0; j < n; ++j) b[j] = S.at(i, j);
    if (!gauss_solve(M, b, x)) return false;
    for (int j = 0; j < n; ++j) C.at(i, j) = x[j];
  }
  return true;
}

bool spectral_free(const MatrixRat& m, Sym s) {
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j)
      if (m.at(i, j).contains(s)) return false;
  return true;
}

FGPair laplace_once(const FGPair& p) {
  Sym s = p.spectral;
  Sym to;
  if (s == S::lambda())
    to = S::mu();
  else if (s == S::mu())
    to = S::lambda();
  else
    throw Error(Err::NotLinearInSpectral, "Laplace transform defined between lambda and mu");

  MatrixRat L0, L1, R0, R1, T00, T01;
  split_linear(p.L, s, L0, L1);
  split_linear(p.R, s, R0, R1);
  split_linear(p.T0, s, T00, T01);
  if (!spectral_free(p.T1, s))
    throw Error(Err::NotLinearInSpectral, "T1 must be constant in the spectral symbol");

  RatFunc sv = RatFunc::var(to);
  FGPair out = p;
  out.spectral = to;
  if (s == S::lambda()) {
    // (lambda .) -> d/dmu, d/dlambda -> (-mu .)
    out.L = L1.scaled(sv) + R1;
    out.R = -(L0.scaled(sv) + L1 + R0);
  } else {
    // (mu .) -> -d/dlambda, d/dmu -> (lambda .)
    out.L = R1 - L1.scaled(sv);
    out.R = R0 + L1 - L0.scaled(sv);
  }
  out.T1 = -p.T1;
  out.T0 = T00 - p.T1;

  // stray plain-derivative term S * dPsi, eliminated against the new
  // spectral equation: S = C L', contributes C R' to T0.
  MatrixRat stray = (s == S::lambda()) ? T01 : -T01;
  if (!stray.is_zero()) {
    MatrixRat C;
    if (!solve_left(out.L, stray, C)) return FGPair{};  // caller retries after pre-moving
    out.T0 = out.T0 + C * out.R;
  }
  return out;
}

// Trade the s-linear part of T0 for an s d/ds term using the spectral
// equation: s*T01*Psi = C * s * L dPsi with C R = T01.  C must be s-free
// with C L s-free, so solve the stacked system C [R0 R1 L1] = [T01 0 0].
FGPair premove_t_linear(const FGPair& p) {
  Sym s = p.spectral;
  int n = p.size();
  MatrixRat T00(n), T01(n), R0(n), R1(n), L0(n), L1(n);
  split_linear(p.T0, s, T00, T01);
  split_linear(p.R, s, R0, R1);
  split_linear(p.L, s, L0, L1);
  MatrixRat C(n);
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<RatFunc>> M(3 * n, std::vector<RatFunc>(n));
    std::vector<RatFunc> b(3 * n), x;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        M[r][c] = R0.at(c, r);
        M[n + r][c] = R1.at(c, r);
        M[2 * n + r][c] = L1.at(c, r);
      }
    for (int j = 0; j < n; ++j) {
      b[j] = T01.at(i, j);
      b[n + j] = RatFunc();
      b[2 * n + j] = RatFunc();
    }
    if (!gauss_solve(M, b, x))
      throw Error(Err::NotLinearInSpectral, "t-equation spectral part cannot be absorbed");
    for (int j = 0; j < n; ++j) C.at(i, j) = x[j];
  }
  FGPair out = p;
  out.T1 = p.T1 + C * p.L.substitute({{s, RatFunc()}});  // C L0, s-free by construction
  out.T0 = T00;
  return out;
}

}  // namespace

FGPair laplace(const FGPair& p, LaplaceDirection) {
  FGPair out = laplace_once(p);
  if (out.size() == 0) out = laplace_once(premove_t_linear(p));
  if (out.size() == 0)
    throw Error(Err::NotLinearInSpectral, "stray spectral derivative cannot be eliminated");
  return out;
}

}  // namespace fg
