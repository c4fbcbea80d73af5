#include "fgpair/analysis.hpp"

namespace fg {

MatrixRat compatibility_residual(const FGPair& p) {
  MatrixRat A = p.solved_A();
  MatrixRat U = p.T0 + p.T1.scaled(RatFunc::var(p.spectral)) * A;
  return A.diff_t(p.table) - U.diff_spectral(p.spectral) + MatrixRat::commutator(A, U);
}

RatFunc eliminate_to_scalar(const DerivationTable& table, Sym target) {
  if (!table.has(target))
    throw Error(Err::NotEliminable, std::string("target not in table: ") + sym_name(target));
  Sym dsym;
  if (target == S::y())
    dsym = S::yp();
  else if (target == S::z())
    dsym = S::zp();
  else
    throw Error(Err::NotEliminable, std::string("no derivative symbol registered for ") + sym_name(target));

  const RatFunc& rate = table.rule(target);
  RatFunc second = rate.diff_t(table);

  // Dependent symbols other than the target still present in the pair
  // (rate, second) must be solvable from  dsym = rate.
  RatFunc::Bindings solve;
  for (int s = 0; s < kSymCount; ++s) {
    if (sym_kind(s) != SymKind::Dependent || s == target) continue;
    if (!rate.contains(s) && !second.contains(s)) continue;
    if (!solve.empty())
      throw Error(Err::NotEliminable, "more than one auxiliary dependent symbol");
    // rate must be linear in s with an s-free slope
    if (!rate.den().contains(s) && rate.num().deg_in(s) == 1) {
      RatFunc slope = rate.coeff_in(s, 1);
      RatFunc rest = rate - slope * RatFunc::var(s);
      if (slope.contains(s) || rest.contains(s))
        throw Error(Err::NotEliminable, "auxiliary symbol not linearly solvable");
      solve[s] = (RatFunc::var(dsym) - rest) / slope;
    } else {
      throw Error(Err::NotEliminable, std::string("table rule not linear in ") + sym_name(s));
    }
  }
  RatFunc out = second.substitute(solve);
  for (int s = 0; s < kSymCount; ++s)
    if (s != target && s != dsym && sym_kind(s) == SymKind::Dependent && out.contains(s))
      throw Error(Err::NotEliminable, std::string("residual dependent symbol ") + sym_name(s));
  return out;
}

ScalarPair scalar_reduce(const FGPair& p, int component, const Extension& twist) {
  if (p.size() != 2) throw Error(Err::BadTransform, "scalar_reduce expects a 2x2 pair");
  ExtScope scope(twist);
  Sym s = p.spectral;
  RatFunc wv = RatFunc::var(twist.w);

  MatrixRat A = p.solved_A();
  MatrixRat U = p.solved_U();
  int c = component - 1, d = 1 - c;

  const RatFunc &acc = A.at(c, c), &acd = A.at(c, d), &adc = A.at(d, c), &add = A.at(d, d);

  // Y_c'' = P Y_c' + Q Y_c
  RatFunc P, Q;
  if (acd.is_zero()) {
    P = RatFunc();
    Q = acc.diff_spectral(s) + acc * acc;
  } else {
    RatFunc dlog = acd.diff_spectral(s) / acd;
    P = acc + add + dlog;
    Q = acc.diff_spectral(s) + acd * adc - acc * add - dlog * acc;
  }

  // V = Y_c / w: the first-order coefficient must cancel against 2 w'/w.
  RatFunc w_log = wv.diff_spectral(s) / wv;        // w'/w, rational after w-reduction
  RatFunc first_order = P - RatFunc(2) * w_log;
  if (!first_order.is_zero())
    throw Error(Err::TwistMismatch, "twist does not cancel the first-order term");

  RatFunc w2_log = wv.diff_spectral(s).diff_spectral(s) / wv;  // w''/w
  ScalarPair out;
  out.spectral = s;
  out.potential = Q + P * w_log - w2_log;
  if (out.potential.contains(twist.w))
    throw Error(Err::TwistMismatch, "potential retains the extension symbol");

  // t-equation: dV/dt = r1 dV/ds + r0 V
  RatFunc w_t = wv.diff_t(p.table) / wv;  // (dw/dt)/w
  if (acd.is_zero()) {
    if (!U.at(c, d).is_zero())
      throw Error(Err::TwistMismatch, "decoupled spectral row but coupled t-row");
    out.r1 = RatFunc();
    out.r0 = U.at(c, c) - w_t;
  } else {
    out.r1 = U.at(c, d) / acd;
    out.r0 = U.at(c, c) + out.r1 * (w_log - acc) - w_t;
  }
  if (out.r1.contains(twist.w) || out.r0.contains(twist.w))
    throw Error(Err::TwistMismatch, "t-equation retains the extension symbol");
  return out;
}

bool symmetric_variables_check(const DerivationTable& table) {
  RatFunc y = RatFunc::var(S::y()), z = RatFunc::var(S::z()), t = RatFunc::var(S::t());
  RatFunc theta = RatFunc::var(S::theta());
  RatFunc f0 = z + RatFunc(2) * y * y + t;
  RatFunc f1 = -z;
  RatFunc q = -y;
  RatFunc a0 = RatFunc(1) - theta;
  RatFunc a1 = theta;
  RatFunc two(2), half = RatFunc::of(1, 2);
  bool ok0 = (f0.diff_t(table) - (-two * q * f0 + a0)).is_zero();
  bool ok1 = (f1.diff_t(table) - (two * q * f1 + a1)).is_zero();
  bool okq = (q.diff_t(table) - half * (f1 - f0)).is_zero();
  return ok0 && ok1 && okq;
}

}  // namespace fg
