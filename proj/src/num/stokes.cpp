#include "fgpair/num/stokes.hpp"

#include <cmath>

#include "fgpair/num/airy.hpp"

namespace fg::num {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

StokesData stokes_matrices(const P2State& st, double tol, double seed_radius, int series_terms) {
  JM2System sys = JM2System::make(st);
  AsymptoticSeries series = jm2_series(st, series_terms);
  // propagation noise accumulates over ~1e5 steps; run the legs two orders
  // tighter than the certification tolerance
  double prop_tol = tol / 100.0;

  // Y_n at the seed ray of sector n+1: Y_{n+1} is its own seed there, Y_n is
  // swept along the arc from its seed ray.
  std::array<M2, 7> at_next{};
  std::array<M2, 7> seeds{};
  for (int n = 1; n <= 7; ++n)
    seeds[n - 1] = canonical_seed(st, series, seed_radius, sector_center(n));
  for (int n = 1; n <= 6; ++n)
    at_next[n - 1] =
        canonical_at(sys, st, series, n, seed_radius, sector_center(n + 1), prop_tol);

  StokesData out;
  double worst = 0.0;
  for (int n = 1; n <= 6; ++n) {
    M2 S = at_next[n - 1].inv() * seeds[n];
    out.S[n - 1] = S;
    bool upper = (n % 2 == 1);
    C mult = upper ? S.b : S.c;
    C off = upper ? S.c : S.b;
    out.s[n - 1] = mult;
    double scale = std::max(1.0, std::abs(mult));
    worst = std::max(worst, std::abs(off) / scale);
    worst = std::max(worst, std::abs(S.a - 1.0) / scale);
    worst = std::max(worst, std::abs(S.d - 1.0) / scale);
  }
  out.template_residual = worst;
  if (worst > std::sqrt(tol))
    throw Error(Err::TemplateViolation,
                "Stokes matrices far from the unipotent templates; residual " +
                    std::to_string(worst));

  M2 prod = out.S[0];
  for (int n = 1; n < 6; ++n) prod = prod * out.S[n];
  C ph = std::exp(C(0.0, -2.0 * kPi) * st.theta);
  out.formal_monodromy = {ph, 0.0, 0.0, 1.0 / ph};
  out.product_residual = (prod - out.formal_monodromy).fro();
  return out;
}

P2State airy_branch_state(double t) {
  C c = std::pow(2.0, -1.0 / 3.0) * std::polar(1.0, -kPi / 3);
  C v = airy_ai(c * t);
  C vp = c * airy_ai_prime(c * t);
  P2State s;
  s.t = t;
  s.theta = 0.0;
  s.y = -vp / v;
  s.z = 0.0;
  s.u = v;
  return s;
}

// On the Airy branch the spectral equation is triangular and the odd
// multipliers collapse to Wronskians of v(t) = Ai(c t) against the rotated
// solutions Ai(omega^k c t), scaled by the contour-representation constant:
//   s_n = v J' - v' J,  J(t) = 2 pi i 2^{-1/3} e^{-i pi/3} omega^k Ai(omega^k c t)
// with k = 1 for s1, k = 2 for s3, k = 0 for s5.
std::array<C, 6> airy_oracle_multipliers(double t) {
  C c = std::pow(2.0, -1.0 / 3.0) * std::polar(1.0, -kPi / 3);
  C omega = std::polar(1.0, 2.0 * kPi / 3);
  C pref = C(0.0, 2.0 * kPi) * std::pow(2.0, -1.0 / 3.0) * std::polar(1.0, -kPi / 3);
  C v = airy_ai(c * t);
  C vp = c * airy_ai_prime(c * t);
  auto wron = [&](int k) {
    C om = std::pow(omega, k);
    C J = pref * om * airy_ai(om * c * t);
    C Jp = pref * om * om * c * airy_ai_prime(om * c * t);
    return v * Jp - vp * J;
  };
  std::array<C, 6> s{};
  s[0] = wron(1);
  s[2] = wron(2);
  s[4] = wron(0);
  return s;
}

}  // namespace fg::num
