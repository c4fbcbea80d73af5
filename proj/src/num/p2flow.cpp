#include "fgpair/num/p2flow.hpp"

namespace fg::num {

P2State integrate_p2(const P2State& s0, double t_end, double tol) {
  if (tol <= 0) throw Error(Err::BadOpening, "integration tolerance must be positive");
  C theta = s0.theta;
  Rhs rhs = [theta](double t, const std::vector<C>& v, std::vector<C>& d) {
    const C &y = v[0], &z = v[1], &u = v[2];
    d[0] = y * y + z + t / 2.0;
    d[1] = -2.0 * y * z - theta;
    d[2] = -y * u;
  };
  OdeOptions opt;
  opt.rtol = tol;
  OdeResult r;
  try {
    r = integrate_ode(rhs, {s0.y, s0.z, s0.u}, s0.t, t_end, opt);
  } catch (const Error& e) {
    throw Error(Err::StepFailure,
                std::string("P2 flow stalled (movable pole suspected): ") + e.what());
  }
  P2State out = s0;
  out.t = t_end;
  out.y = r.y[0];
  out.z = r.y[1];
  out.u = r.y[2];
  if (std::abs(out.u) == 0.0) throw Error(Err::StepFailure, "u reached zero");
  return out;
}

P2State y_zero_branch(double t) {
  P2State s;
  s.t = t;
  s.y = 0.0;
  s.z = -t / 2.0;
  s.u = 1.0;
  s.theta = 0.5;
  return s;
}

SymVals state_symvals(const P2State& s) {
  SymVals v{};
  v[S::y()] = s.y;
  v[S::z()] = s.z;
  v[S::u()] = s.u;
  v[S::t()] = s.t;
  v[S::theta()] = s.theta;
  return v;
}

}  // namespace fg::num
