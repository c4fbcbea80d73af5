#include "fgpair/num/canonical.hpp"

#include <algorithm>
#include <cmath>

#include "fgpair/catalog.hpp"

namespace fg::num {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

JM2System JM2System::make(const P2State& s) {
  static const CompiledMatrix A_c = CompiledMatrix::from(catalog("JM2").solved_A());
  static const CompiledMatrix U_c = CompiledMatrix::from(catalog("JM2").solved_U());
  JM2System sys;
  sys.A = A_c;
  sys.U = U_c;
  sys.base = state_symvals(s);
  return sys;
}

M2 JM2System::evalA(C lambda) const {
  SymVals v = base;
  v[S::lambda()] = lambda;
  return A.eval2(v);
}

M2 JM2System::evalU(C lambda) const {
  SymVals v = base;
  v[S::lambda()] = lambda;
  return U.eval2(v);
}

C q_exponent(const P2State& s, double r, double ang) {
  C lambda = std::polar(r, ang);
  C log_lambda(std::log(r), ang);
  return lambda * lambda * lambda / 3.0 + lambda * (s.t / 2.0) - s.theta * log_lambda;
}

M2 AsymptoticSeries::prefactor(C lambda) const {
  M2 acc = M2::id();
  C inv = 1.0 / lambda;
  C p = 1.0;
  for (const M2& y : Yk) {
    p *= inv;
    acc.a += y.a * p;
    acc.b += y.b * p;
    acc.c += y.c * p;
    acc.d += y.d * p;
  }
  return acc;
}

namespace {

// dense complex Gaussian elimination with partial pivoting
std::vector<C> solve_dense(std::vector<std::vector<C>> M, std::vector<C> b) {
  const size_t n = b.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    for (size_t r = col + 1; r < n; ++r)
      if (std::abs(M[r][col]) > std::abs(M[piv][col])) piv = r;
    std::swap(M[col], M[piv]);
    std::swap(b[col], b[piv]);
    if (std::abs(M[col][col]) == 0.0)
      throw Error(Err::StepFailure, "singular series system");
    C inv = 1.0 / M[col][col];
    for (size_t j = col; j < n; ++j) M[col][j] *= inv;
    b[col] *= inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == col || std::abs(M[r][col]) == 0.0) continue;
      C f = M[r][col];
      for (size_t j = col; j < n; ++j) M[r][j] -= f * M[col][j];
      b[r] -= f * b[col];
    }
  }
  return b;
}

}  // namespace

// The expansion coefficients satisfy, at order lambda^{2-M},
//   Y_M sigma3 - sigma3 Y_M = A1 Y_{M-1} + A0 Y_{M-2} - (t/2) Y_{M-2} sigma3
//                             + theta Y_{M-3} sigma3 + (M-3) Y_{M-3}.
// Off-diagonals come from the commutator; diagonals are pinned three orders
// later (the lower-order diagonal conditions cancel identically), so all
// coefficients are found at once from one banded linear system.
AsymptoticSeries jm2_series(const P2State& s, int terms) {
  const int K = terms;
  const C u = s.u, y = s.y, z = s.z, th = s.theta;
  const double t = s.t;
  const C A1_01 = u, A1_10 = -2.0 * z / u;
  const C A0_00 = z + t / 2.0, A0_01 = -u * y;
  const C A0_10 = -2.0 * (y * z + th) / u, A0_11 = -(z + t / 2.0);

  // unknowns per k = 1..K: o01_k, o10_k, d0_k, d1_k
  const int N = 4 * K;
  auto o01 = [&](int k) { return 4 * (k - 1) + 0; };
  auto o10 = [&](int k) { return 4 * (k - 1) + 1; };
  auto d0 = [&](int k) { return 4 * (k - 1) + 2; };
  auto d1 = [&](int k) { return 4 * (k - 1) + 3; };

  std::vector<std::vector<C>> M;
  std::vector<C> rhs;
  auto add_row = [&]() -> std::vector<C>& {
    M.emplace_back(N, C(0.0));
    rhs.emplace_back(0.0);
    return M.back();
  };
  // contribution of a coefficient entry: in range -> matrix column, k = 0 ->
  // identity values, k < 0 -> zero
  auto put = [&](std::vector<C>& row, int idx_kind, int k, C coeff) {
    if (k < 0 || std::abs(coeff) == 0.0) return;
    if (k == 0) {
      // Y_0 = I: o01 = o10 = 0, d0 = d1 = 1
      if (idx_kind >= 2) rhs.back() -= coeff;
      return;
    }
    if (k > K) return;  // truncated tail
    row[4 * (k - 1) + idx_kind] += coeff;
  };

  for (int m = 1; m <= K; ++m) {
    {  // 2 o01_m + [RHS]_01 = 0
      auto& row = add_row();
      row[o01(m)] += 2.0;
      put(row, 3, m - 1, A1_01);                    // A1_01 d1_{m-1}
      put(row, 0, m - 2, A0_00 + C(t / 2.0));       // (A0_00 + t/2) o01_{m-2}
      put(row, 3, m - 2, A0_01);                    // A0_01 d1_{m-2}
      put(row, 0, m - 3, -th + C(double(m - 3)));   // (-theta + m-3) o01_{m-3}
    }
    {  // -2 o10_m + [RHS]_10 = 0
      auto& row = add_row();
      row[o10(m)] += -2.0;
      put(row, 2, m - 1, A1_10);
      put(row, 2, m - 2, A0_10);
      put(row, 1, m - 2, A0_11 - C(t / 2.0));
      put(row, 1, m - 3, th + C(double(m - 3)));
    }
  }
  for (int m = 4; m <= K + 1; ++m) {
    {  // [RHS_m]_00 = 0
      auto& row = add_row();
      put(row, 1, m - 1, A1_01);
      put(row, 2, m - 2, A0_00 - C(t / 2.0));
      put(row, 1, m - 2, A0_01);
      put(row, 2, m - 3, th + C(double(m - 3)));
    }
    {  // [RHS_m]_11 = 0
      auto& row = add_row();
      put(row, 0, m - 1, A1_10);
      put(row, 0, m - 2, A0_10);
      put(row, 3, m - 2, A0_11 + C(t / 2.0));
      put(row, 3, m - 3, -th + C(double(m - 3)));
    }
  }
  {  // truncation pins
    auto& r1 = add_row();
    r1[d0(K)] = 1.0;
    auto& r2 = add_row();
    r2[d1(K)] = 1.0;
    auto& r3 = add_row();
    r3[d0(K - 1)] = 1.0;
    auto& r4 = add_row();
    r4[d1(K - 1)] = 1.0;
  }
  if (int(M.size()) != N)
    throw Error(Err::StepFailure, "series system shape mismatch");

  std::vector<C> x = solve_dense(std::move(M), std::move(rhs));
  AsymptoticSeries series;
  // the last few coefficients absorb the truncation pins; drop them
  int usable = std::max(1, K - 4);
  for (int k = 1; k <= usable; ++k)
    series.Yk.push_back({x[d0(k)], x[o01(k)], x[o10(k)], x[d1(k)]});
  return series;
}

M2 canonical_seed(const P2State& s, const AsymptoticSeries& series, double radius, double ang) {
  C lambda = std::polar(radius, ang);
  C q = q_exponent(s, radius, ang);
  M2 pre = series.prefactor(lambda);
  C ep = std::exp(q), em = std::exp(-q);
  return {pre.a * ep, pre.b * em, pre.c * ep, pre.d * em};
}

M2 propagate(const JM2System& sys, M2 Y, const Path& path, double s_from, double s_to,
             double tol) {
  Rhs rhs = [&sys, &path](double sig, const std::vector<C>& v, std::vector<C>& d) {
    PathPoint p = path.at(sig);
    M2 A = sys.evalA(p.lambda);
    M2 Y{v[0], v[1], v[2], v[3]};
    M2 dY = A * Y;
    d[0] = p.dlambda * dY.a;
    d[1] = p.dlambda * dY.b;
    d[2] = p.dlambda * dY.c;
    d[3] = p.dlambda * dY.d;
  };
  OdeOptions opt;
  opt.rtol = tol;
  std::vector<int> groups{0, 1, 0, 1};
  auto r = integrate_ode(rhs, {Y.a, Y.b, Y.c, Y.d}, s_from, s_to, opt, groups);
  return {r.y[0], r.y[1], r.y[2], r.y[3]};
}

double sector_center(int n) { return kPi / 6 + kPi * (n - 1) / 3.0; }

// Angular legs are run at a small dip radius: on the seed and target rays
// the cubic exponent is neutral, and at the dip radius the two modes never
// separate, so both columns survive in double precision.  (A large-radius
// arc would cross an exp(+-r^3/3) dominance bump that no relative tolerance
// can see through.)
M2 canonical_at(const JM2System& sys, const P2State& s, const AsymptoticSeries& series,
                int sector, double radius, double to_angle, double tol) {
  double a = sector_center(sector);
  M2 seed = canonical_seed(s, series, radius, a);
  if (a == to_angle) return seed;
  const double dip = 1.0;
  Path path;
  path.legs.push_back({Leg::Kind::Radial, a, radius, dip, 0, 0, 0});
  Leg arc;
  arc.kind = Leg::Kind::Arc;
  arc.radius = dip;
  arc.a0 = a;
  arc.a1 = to_angle;
  path.legs.push_back(arc);
  path.legs.push_back({Leg::Kind::Radial, to_angle, dip, radius, 0, 0, 0});
  return propagate(sys, seed, path, 0.0, path.length(), tol);
}

CanonicalSolution canonical_solution(const P2State& s, int sector, const Contour& contour,
                                     double seed_radius, double tol, int column) {
  if (seed_radius < contour.r_trunc)
    throw Error(Err::BadOpening, "seed radius must reach past the contour truncation");
  const Path& path = contour.col[column];
  const Leg& first = path.legs.front();
  if (first.kind != Leg::Kind::Radial)
    throw Error(Err::QuadratureFailure, "contour must start on a ray");

  JM2System sys = JM2System::make(s);
  AsymptoticSeries series = jm2_series(s, 24);

  CanonicalSolution out;
  out.sector = sector;
  out.seed_radius = seed_radius;
  out.branch_angle = sector_center(sector);
  // Seed on the sector's central anti-Stokes ray, where the exponent is
  // neutral and the seed stays representable at any radius, then walk to
  // the contour's inner junction through the dip radius.
  M2 Y = canonical_seed(s, series, seed_radius, out.branch_angle);
  {
    Path approach;
    approach.legs.push_back(
        {Leg::Kind::Radial, out.branch_angle, seed_radius, contour.arc_radius, 0, 0, 0});
    Leg swing;
    swing.kind = Leg::Kind::Arc;
    swing.radius = contour.arc_radius;
    swing.a0 = out.branch_angle;
    swing.a1 = first.angle;
    approach.legs.push_back(swing);
    // the seeding stage runs tighter than the sweep so the seed-doubling
    // certificate measures the asymptotic truncation, not transport noise
    Y = propagate(sys, Y, approach, 0.0, approach.length(), tol / 100.0);
  }
  out.at_junction = Y;
  double sigma_junction = first.length();

  Rhs rhs = [&sys, &path](double sig, const std::vector<C>& v, std::vector<C>& d) {
    PathPoint p = path.at(sig);
    M2 A = sys.evalA(p.lambda);
    M2 Ym{v[0], v[1], v[2], v[3]};
    M2 dY = A * Ym;
    d[0] = p.dlambda * dY.a;
    d[1] = p.dlambda * dY.b;
    d[2] = p.dlambda * dY.c;
    d[3] = p.dlambda * dY.d;
  };
  OdeOptions opt;
  opt.rtol = tol;
  std::vector<int> groups{0, 1, 0, 1};
  StepObserver obs = [&](double sig, const std::vector<C>& v) {
    out.samples.push_back({sig, path.at(sig).lambda, M2{v[0], v[1], v[2], v[3]}});
  };
  std::vector<C> yj{Y.a, Y.b, Y.c, Y.d};
  auto back = integrate_ode(rhs, yj, sigma_junction, 0.0, opt, groups, obs);
  out.at_start = {back.y[0], back.y[1], back.y[2], back.y[3]};
  auto fwd = integrate_ode(rhs, yj, sigma_junction, path.length(), opt, groups, obs);
  out.end = {fwd.y[0], fwd.y[1], fwd.y[2], fwd.y[3]};
  std::sort(out.samples.begin(), out.samples.end(),
            [](const auto& a, const auto& b) { return a.sigma < b.sigma; });
  return out;
}

}  // namespace fg::num
