#include "fgpair/num/evalpair.hpp"

namespace fg::num {

namespace {

std::vector<CompiledRF::Term> compile_poly(const Poly& p) {
  std::vector<CompiledRF::Term> out;
  for (auto& [m, c] : p.terms()) {
    CompiledRF::Term t;
    t.coeff = c.to_complex();
    for (int s = 0; s < kSymCount; ++s)
      if (m.e[s]) t.pows.emplace_back(s, int(m.e[s]));
    out.push_back(std::move(t));
  }
  return out;
}

C eval_terms(const std::vector<CompiledRF::Term>& ts, const SymVals& v) {
  C sum = 0.0;
  for (auto& t : ts) {
    C prod = t.coeff;
    for (auto& [s, k] : t.pows) {
      C base = v[s];
      for (int i = 0; i < k; ++i) prod *= base;
    }
    sum += prod;
  }
  return sum;
}

}  // namespace

CompiledRF CompiledRF::from(const RatFunc& f) {
  CompiledRF out;
  out.num = compile_poly(f.num());
  out.den = compile_poly(f.den());
  return out;
}

C CompiledRF::eval(const SymVals& v) const {
  return eval_terms(num, v) / eval_terms(den, v);
}

CompiledMatrix CompiledMatrix::from(const MatrixRat& m) {
  CompiledMatrix out;
  out.n = m.size();
  for (int i = 0; i < out.n; ++i)
    for (int j = 0; j < out.n; ++j) out.e.push_back(CompiledRF::from(m.at(i, j)));
  return out;
}

M2 CompiledMatrix::eval2(const SymVals& v) const {
  if (n != 2) throw Error(Err::BadTransform, "eval2 needs a 2x2 matrix");
  return {e[0].eval(v), e[1].eval(v), e[2].eval(v), e[3].eval(v)};
}

}  // namespace fg::num
