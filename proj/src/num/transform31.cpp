#include "fgpair/num/transform31.hpp"

#include <cmath>

#include "fgpair/catalog.hpp"

namespace fg::num {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct HTWSystem {
  CompiledMatrix A, U;
  static HTWSystem make() {
    static const CompiledMatrix A_c = CompiledMatrix::from(catalog("HTW").solved_A());
    static const CompiledMatrix U_c = CompiledMatrix::from(catalog("HTW").solved_U());
    return {A_c, U_c};
  }
  M2 evalA(const P2State& s, C mu) const {
    SymVals v = state_symvals(s);
    v[S::mu()] = mu;
    return A.eval2(v);
  }
  M2 evalU(const SymVals& base, C mu) const {
    SymVals v = base;
    v[S::mu()] = mu;
    return U.eval2(v);
  }
};

C kernel_exponent(C lambda, C mu, double t, bool corrupt) {
  C cubic = lambda * lambda * lambda / 3.0;
  return (corrupt ? cubic : -cubic) + lambda * (mu - t / 2.0);
}

struct ContourRun {
  std::vector<M2> V;  // raw truncated integrals, one per mu
  M2 Y_start, Y_end;  // fundamental family at the path endpoints
};

// Integrate [Y | V_j] from the seed parameter to both path ends; V_j
// accumulates exp(kernel(mu_j)) * Y.
ContourRun contour_integrals(const JM2System& sys, const P2State& st, const Path& path,
                             M2 seed, double sigma_seed, const std::vector<C>& mus,
                             bool corrupt, double tol) {
  const size_t m = mus.size();
  const size_t dim = 4 + 4 * m;
  Rhs rhs = [&](double sig, const std::vector<C>& v, std::vector<C>& d) {
    PathPoint p = path.at(sig);
    M2 A = sys.evalA(p.lambda);
    M2 Y{v[0], v[1], v[2], v[3]};
    M2 dY = A * Y;
    d[0] = p.dlambda * dY.a;
    d[1] = p.dlambda * dY.b;
    d[2] = p.dlambda * dY.c;
    d[3] = p.dlambda * dY.d;
    for (size_t j = 0; j < m; ++j) {
      C ker = std::exp(kernel_exponent(p.lambda, mus[j], st.t, corrupt)) * p.dlambda;
      d[4 + 4 * j + 0] = ker * Y.a;
      d[4 + 4 * j + 1] = ker * Y.b;
      d[4 + 4 * j + 2] = ker * Y.c;
      d[4 + 4 * j + 3] = ker * Y.d;
    }
  };
  // entries (a,c) and (b,d) of each 2x2 block share a column scale
  std::vector<int> groups(dim);
  for (size_t blk = 0; blk < 1 + m; ++blk) {
    groups[4 * blk + 0] = int(2 * blk);
    groups[4 * blk + 2] = int(2 * blk);
    groups[4 * blk + 1] = int(2 * blk + 1);
    groups[4 * blk + 3] = int(2 * blk + 1);
  }
  OdeOptions opt;
  opt.rtol = tol;
  // quadrature accumulators get an absolute error floor at the target scale;
  // the fundamental columns stay purely relative
  opt.abs_floor.assign(2 * (1 + m), tol);
  opt.abs_floor[0] = opt.abs_floor[1] = 0.0;

  std::vector<C> y0(dim, C(0.0));
  y0[0] = seed.a;
  y0[1] = seed.b;
  y0[2] = seed.c;
  y0[3] = seed.d;
  auto fwd = integrate_ode(rhs, y0, sigma_seed, path.length(), opt, groups);
  auto bwd = (sigma_seed > 0.0) ? integrate_ode(rhs, y0, sigma_seed, 0.0, opt, groups)
                                : OdeResult{y0, 0, 0};

  ContourRun run;
  run.Y_end = {fwd.y[0], fwd.y[1], fwd.y[2], fwd.y[3]};
  run.Y_start = {bwd.y[0], bwd.y[1], bwd.y[2], bwd.y[3]};
  run.V.resize(m);
  for (size_t j = 0; j < m; ++j) {
    auto pick = [&](const std::vector<C>& v) {
      return M2{v[4 + 4 * j], v[5 + 4 * j], v[6 + 4 * j], v[7 + 4 * j]};
    };
    run.V[j] = pick(fwd.y) - pick(bwd.y);  // int_0^end = fwd(end) - bwd(0)
  }
  return run;
}

// Truncation tails.  Past the truncation radius the family is written in
// the asymptotic frame Yhat(lambda) e^{Q sigma3}; the kernel cancels the
// cubic in the first frame column, leaving exp(lambda mu - theta log lambda)
// which decays only through Re(lambda mu) < 0.  The second frame column
// carries exp(-2 lambda^3/3 ...) and is far below any tolerance at the
// truncation radius, so the tail is the rank-one piece
//   (int kernel Yhat e1 e^{E1}) * (first row of the frame coordinates).
struct RayTail {
  std::array<C, 2> col;  // integral of the first frame column
};

RayTail ray_tail(const P2State& st, const AsymptoticSeries& series, double R, double ang,
                 C mu, double tol) {
  double rate = std::abs(mu) * std::cos(ang + std::arg(mu));
  if (rate >= -1e-3)
    throw Error(Err::TailNotDecaying, "Laplace factor does not decay on this ray");
  double r_far = R + 80.0 / (-rate);
  C dir = std::polar(1.0, ang);
  Rhs rhs = [&](double r, const std::vector<C>&, std::vector<C>& d) {
    C lambda = std::polar(r, ang);
    C log_lambda(std::log(r), ang);
    C e1 = std::exp(lambda * mu - st.theta * log_lambda);
    M2 pre = series.prefactor(lambda);
    d[0] = dir * pre.a * e1;
    d[1] = dir * pre.c * e1;
  };
  OdeOptions opt;
  opt.rtol = tol;
  opt.group_floor = 1.0;  // pure quadrature: scale by the running integral
  opt.abs_floor = {tol};
  auto r = integrate_ode(rhs, {C(0.0), C(0.0)}, R, r_far, opt);
  return {{r.y[0], r.y[1]}};
}

// First-row frame coordinates of the columns of Y at lambda = (R, ang):
// c = e^{-Q} * (Yhat^{-1} Y) row 1.
std::array<C, 2> frame_row1(const P2State& st, const AsymptoticSeries& series, double R,
                            double ang, const M2& Y) {
  C lambda = std::polar(R, ang);
  M2 pre_inv = series.prefactor(lambda).inv();
  C g0 = pre_inv.a * Y.a + pre_inv.b * Y.c;
  C g1 = pre_inv.a * Y.b + pre_inv.b * Y.d;
  C q = q_exponent(st, R, ang);
  // scale-shifted product exp(-q)*g, safe across the full dynamic range
  auto scaled = [&](C g) {
    if (g == C(0.0)) return C(0.0);
    double lg = std::log(std::abs(g));
    double mag = lg - q.real();
    if (mag < -700.0) return C(0.0);
    return std::polar(std::exp(mag), std::arg(g) - q.imag());
  };
  return {scaled(g0), scaled(g1)};
}

M2 add_tails(const P2State& st, const AsymptoticSeries& series, const Path& path,
             const ContourRun& run, size_t mu_index, C mu, double tol) {
  M2 V = run.V[mu_index];
  const Leg& in = path.legs.front();
  const Leg& out = path.legs.back();
  // outgoing ray contributes + tail, incoming ray - tail (orientation)
  RayTail t_out = ray_tail(st, series, out.r1, out.angle, mu, tol);
  RayTail t_in = ray_tail(st, series, in.r0, in.angle, mu, tol);
  auto c_out = frame_row1(st, series, out.r1, out.angle, run.Y_end);
  auto c_in = frame_row1(st, series, in.r0, in.angle, run.Y_start);
  V.a += t_out.col[0] * c_out[0] - t_in.col[0] * c_in[0];
  V.b += t_out.col[0] * c_out[1] - t_in.col[0] * c_in[1];
  V.c += t_out.col[1] * c_out[0] - t_in.col[1] * c_in[0];
  V.d += t_out.col[1] * c_out[1] - t_in.col[1] * c_in[1];
  return V;
}

M2 left_factor(const P2State& st, C mu, double arg_mu, const M2& integral) {
  // W = mu^{-theta/2} diag(-mu/u, 1/2) * integral
  C log_mu(std::log(std::abs(mu)), arg_mu);
  C power = std::exp(-st.theta / 2.0 * log_mu);
  C top = -mu / st.u;
  return {power * top * integral.a, power * top * integral.b, power * 0.5 * integral.c,
          power * 0.5 * integral.d};
}

}  // namespace

TransformEval integral_transform(const P2State& st, const Contour& contour, C mu,
                                 double arg_mu, const TransformOptions& opt) {
  if (contour.split)
    throw Error(Err::BadTransform, "use integral_transform_split for split contours");
  JM2System sys = JM2System::make(st);
  AsymptoticSeries series = jm2_series(st, 24);
  const Path& path = contour.col[0];
  double sigma_seed = path.legs[0].length() + path.legs[1].length() / 2;
  ContourRun run =
      contour_integrals(sys, st, path, M2::id(), sigma_seed, {mu}, opt.corrupt_kernel, opt.tol);
  M2 V = opt.corrupt_kernel ? run.V[0] : add_tails(st, series, path, run, 0, mu, opt.tol);
  TransformEval ev;
  ev.mu = mu;
  ev.arg_mu = arg_mu;
  ev.W = left_factor(st, mu, arg_mu, V);
  ev.det_w = std::abs(ev.W.det());
  return ev;
}

M2 htw_transfer_mu(const P2State& st, C mu1, C mu2, double tol) {
  HTWSystem htw = HTWSystem::make();
  C delta = mu2 - mu1;
  Rhs rhs = [&](double sig, const std::vector<C>& v, std::vector<C>& d) {
    C mu = mu1 + sig * delta;
    M2 A = htw.evalA(st, mu);
    M2 W{v[0], v[1], v[2], v[3]};
    M2 dW = A * W;
    d[0] = delta * dW.a;
    d[1] = delta * dW.b;
    d[2] = delta * dW.c;
    d[3] = delta * dW.d;
  };
  OdeOptions opt;
  opt.rtol = tol;
  auto r = integrate_ode(rhs, {1.0, 0.0, 0.0, 1.0}, 0.0, 1.0, opt, {0, 1, 0, 1});
  return {r.y[0], r.y[1], r.y[2], r.y[3]};
}

namespace {

// Advance the P2 flow together with a matrix ODE dM/dt = coeff(state) M.
template <typename Coeff>
M2 flow_transfer(const P2State& s0, double t1, M2 M0, const Coeff& coeff, double tol) {
  Rhs rhs = [&](double t, const std::vector<C>& v, std::vector<C>& d) {
    P2State cur;
    cur.t = t;
    cur.y = v[0];
    cur.z = v[1];
    cur.u = v[2];
    cur.theta = s0.theta;
    d[0] = cur.y * cur.y + cur.z + t / 2.0;
    d[1] = -2.0 * cur.y * cur.z - s0.theta;
    d[2] = -cur.y * cur.u;
    M2 A = coeff(cur);
    M2 M{v[3], v[4], v[5], v[6]};
    M2 dM = A * M;
    d[3] = dM.a;
    d[4] = dM.b;
    d[5] = dM.c;
    d[6] = dM.d;
  };
  OdeOptions opt;
  opt.rtol = tol;
  auto r = integrate_ode(rhs, {s0.y, s0.z, s0.u, M0.a, M0.b, M0.c, M0.d}, s0.t, t1, opt,
                         {0, 0, 0, 1, 2, 1, 2});
  return {r.y[3], r.y[4], r.y[5], r.y[6]};
}

}  // namespace

Theorem31Report verify_theorem31(const P2State& st, C mu1, C mu2, double arg_mu,
                                 const TransformOptions& opt, double acc_tol,
                                 double t_second, bool with_controls) {
  Theorem31Report rep;
  int k;
  if (opt.k) {
    k = *opt.k;
  } else if (!admissible_k(arg_mu, opt.eps, k)) {
    throw Error(Err::MuOutsideWedge, "no admissible sector for this arg mu");
  }
  rep.k = k;
  Contour contour = build_contour(k, opt.eps, opt.r_trunc, arg_mu);

  JM2System sys = JM2System::make(st);
  AsymptoticSeries series = jm2_series(st, 24);
  const Path& path = contour.col[0];
  double sigma_seed = path.legs[0].length() + path.legs[1].length() / 2;
  ContourRun run =
      contour_integrals(sys, st, path, M2::id(), sigma_seed, {mu1, mu2}, false, opt.tol);
  M2 W1 = left_factor(st, mu1, arg_mu, add_tails(st, series, path, run, 0, mu1, opt.tol));
  M2 W2 = left_factor(st, mu2, arg_mu, add_tails(st, series, path, run, 1, mu2, opt.tol));
  rep.det_w = std::abs(W1.det());

  M2 T = htw_transfer_mu(st, mu1, mu2, opt.tol);
  rep.residual_mu = (W2 - T * W1).fro() / W2.fro();

  if (with_controls) {  // truncation certificate: doubling changes nothing measurable
    Contour wide = build_contour(k, opt.eps, 2.0 * opt.r_trunc, arg_mu);
    const Path& wpath = wide.col[0];
    double wseed = wpath.legs[0].length() + wpath.legs[1].length() / 2;
    ContourRun wrun =
        contour_integrals(sys, st, wpath, M2::id(), wseed, {mu1}, false, opt.tol);
    M2 W1w = left_factor(st, mu1, arg_mu, add_tails(st, series, wpath, wrun, 0, mu1, opt.tol));
    rep.r_double_delta = (W1w - W1).fro();
  }

  if (with_controls) {  // corrupted kernel must fail the same transfer test
    ContourRun bad =
        contour_integrals(sys, st, path, M2::id(), sigma_seed, {mu1, mu2}, true, opt.tol);
    M2 B1 = left_factor(st, mu1, arg_mu, bad.V[0]);
    M2 B2 = left_factor(st, mu2, arg_mu, bad.V[1]);
    rep.negative_control = (B2 - T * B1).fro() / B2.fro();
  }

  if (t_second != 0.0 && t_second != st.t) {
    // evolve the seed by the JM2 t-equation at the arc midpoint, re-run the
    // transform at the advanced state, and test the HTW t-transfer
    PathPoint mid = path.at(sigma_seed);
    M2 seed2 = flow_transfer(
        st, t_second, M2::id(),
        [&](const P2State& cur) { return JM2System::make(cur).evalU(mid.lambda); }, opt.tol);
    P2State st2 = integrate_p2(st, t_second, opt.tol);
    JM2System sys2 = JM2System::make(st2);
    AsymptoticSeries series2 = jm2_series(st2, 24);
    ContourRun run2 = contour_integrals(sys2, st2, path, seed2, sigma_seed, {mu1}, false, opt.tol);
    M2 W1_t2 =
        left_factor(st2, mu1, arg_mu, add_tails(st2, series2, path, run2, 0, mu1, opt.tol));
    HTWSystem htw = HTWSystem::make();
    M2 Tt = flow_transfer(
        st, t_second, M2::id(),
        [&](const P2State& cur) { return htw.evalU(state_symvals(cur), mu1); }, opt.tol);
    rep.residual_t = (W1_t2 - Tt * W1).fro() / W1_t2.fro();
  }

  rep.pass = rep.residual_mu <= acc_tol && (t_second == 0.0 || rep.residual_t <= acc_tol) &&
             (!with_controls || (rep.r_double_delta <= 1e-8 && rep.negative_control >= 1e-2));
  return rep;
}

TransformEval integral_transform_split(const P2State& st, C mu, double arg_mu,
                                       const TransformOptions& opt) {
  Contour contour = build_split_contour(opt.r_trunc);
  JM2System sys = JM2System::make(st);
  AsymptoticSeries series = jm2_series(st, 24);

  // column j of the integrand matrix is the second column of Y_{2j+2},
  // carried along its own contour; the canonical value is brought to the
  // contour's inner junction through the dip radius, where both modes are
  // still representable
  std::array<C, 2> cols[2];
  const int sectors[2] = {2, 4};
  const double seed_radius = std::max(8.0, opt.r_trunc);
  for (int j = 0; j < 2; ++j) {
    const Path& path = contour.col[j];
    double ray_angle = path.legs.front().angle;
    M2 Yn = canonical_seed(st, series, seed_radius, sector_center(sectors[j]));
    Path approach;
    approach.legs.push_back(
        {Leg::Kind::Radial, sector_center(sectors[j]), seed_radius, contour.arc_radius, 0, 0, 0});
    Leg swing;
    swing.kind = Leg::Kind::Arc;
    swing.radius = contour.arc_radius;
    swing.a0 = sector_center(sectors[j]);
    swing.a1 = ray_angle;
    approach.legs.push_back(swing);
    Yn = propagate(sys, Yn, approach, 0.0, approach.length(), opt.tol);
    double sigma_seed = path.legs.front().length();  // inner junction of the contour
    ContourRun run =
        contour_integrals(sys, st, path, Yn, sigma_seed, {mu}, opt.corrupt_kernel, opt.tol);
    // outgoing-ray Laplace tail of the carried second column
    const Leg& out = path.legs.back();
    RayTail t_out = ray_tail(st, series, out.r1, out.angle, mu, opt.tol);
    auto c_out = frame_row1(st, series, out.r1, out.angle, run.Y_end);
    cols[j] = {run.V[0].b + t_out.col[0] * c_out[1], run.V[0].d + t_out.col[1] * c_out[1]};
  }
  M2 integral{cols[0][0], cols[1][0], cols[0][1], cols[1][1]};
  TransformEval ev;
  ev.mu = mu;
  ev.arg_mu = arg_mu;
  ev.W = left_factor(st, mu, arg_mu, integral);
  ev.det_w = std::abs(ev.W.det());
  return ev;
}

}  // namespace fg::num
