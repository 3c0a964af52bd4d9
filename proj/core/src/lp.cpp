#include "wernerdec/lp.hpp"

#include "wernerdec/simplex.hpp"
#include "wernerdec/symmetric.hpp"

#include <stdexcept>

namespace wernerdec {

namespace {

// Scales a row to integer entries; positive factor, so constraints and the
// sign of the objective are unchanged.
void clear_denominators(std::vector<Rational>& coeffs, Rational* rhs) {
  Integer common = 1;
  for (const auto& c : coeffs) common = lcm(common, denominator(c));
  if (rhs != nullptr) common = lcm(common, denominator(*rhs));
  if (common == 1) return;
  const Rational f(common);
  for (auto& c : coeffs) c *= f;
  if (rhs != nullptr) *rhs *= f;
}

}  // namespace

LPInstance build_lp(int n, int m, int d, const Rational& p1, const Rational& p2) {
  if (n < 1 || m < 1) throw std::invalid_argument("build_lp: tensor powers must be >= 1");
  if (d < 2) throw std::invalid_argument("build_lp: local dimension must be >= 2");
  if (p1 < 0 || p1 > 1 || p2 < 0 || p2 > 1)
    throw std::invalid_argument("build_lp: parameters must lie in [0, 1]");
  LPInstance inst;
  inst.n = n;
  inst.m = m;
  inst.d = d;
  inst.p1 = p1;
  inst.p2 = p2;
  inst.v1 = v_vector(n, p1, d);
  inst.v2 = v_vector(m, p2, d);
  inst.vn = v_matrix(n, d);
  inst.vm = v_matrix(m, d);
  return inst;
}

LPOutcome solve_lp(const LPInstance& inst) {
  const int n = inst.n, m = inst.m;
  const int nv = inst.variable_count();
  // Substituted coordinates R = Q V^m: the positivity block becomes the
  // variable bounds R >= 0, leaving only the PPT block and the normalization
  // as tableau rows. Q is recovered exactly as R (V^m)^{-1}.
  const RationalMatrix w = inst.vm.inverse();
  const auto idx = [m](int k, int a) { return k * (m + 1) + a; };

  std::vector<Rational> objective(nv);
  RationalMatrix wv2 = w * inst.v2;
  for (int k = 0; k <= n; ++k)
    for (int a = 0; a <= m; ++a) objective[idx(k, a)] = inst.v1(k, 0) * wv2(a, 0);
  clear_denominators(objective, nullptr);

  std::vector<SimplexRow> rows;
  rows.reserve(nv + 1);
  for (int j = 0; j <= m; ++j)
    for (int i = 0; i <= n; ++i) {
      SimplexRow row;
      row.coeffs.resize(nv);
      for (int k = 0; k <= n; ++k)
        for (int a = 0; a <= m; ++a) row.coeffs[idx(k, a)] = w(a, j) * inst.vn(k, i);
      row.rhs = 0;
      clear_denominators(row.coeffs, &row.rhs);
      rows.push_back(std::move(row));
    }
  SimplexRow normalization;
  normalization.coeffs.resize(nv);
  for (int a = 0; a <= m; ++a) {
    Rational wsum = 0;
    for (int j = 0; j <= m; ++j) wsum += w(a, j);
    for (int k = 0; k <= n; ++k) normalization.coeffs[idx(k, a)] = wsum;
  }
  normalization.rhs = 1;
  normalization.equality = true;
  clear_denominators(normalization.coeffs, &normalization.rhs);
  rows.push_back(std::move(normalization));

  const SimplexResult res = solve_simplex(objective, rows);
  LPOutcome out;
  out.pivots = res.pivots;
  switch (res.status) {
    case SimplexStatus::Infeasible:
      out.status = LPStatus::Infeasible;
      return out;
    case SimplexStatus::Unbounded:
      out.status = LPStatus::Unbounded;
      return out;
    case SimplexStatus::Optimal:
      break;
  }
  out.status = LPStatus::Optimal;
  RationalMatrix r(n + 1, m + 1);
  for (int k = 0; k <= n; ++k)
    for (int a = 0; a <= m; ++a) r(k, a) = res.x[idx(k, a)];
  out.witness_q = r * w;
  // Report the value from the recovered witness; the tableau objective was
  // rescaled by clear_denominators.
  out.value = (inst.v1.transposed() * out.witness_q * inst.v2)(0, 0);
  return out;
}

DecompositionDecision is_decomposable_werner(int n, int m, int d, const Rational& p1,
                                             const Rational& p2) {
  const LPOutcome outcome = solve_lp(build_lp(n, m, d, p1, p2));
  if (outcome.status != LPStatus::Optimal)
    throw std::logic_error("is_decomposable_werner: solver did not reach an optimum");
  DecompositionDecision decision;
  decision.value = outcome.value;
  decision.witness_q = outcome.witness_q;
  decision.decomposable = outcome.value >= 0;
  decision.boundary = outcome.value == 0;
  return decision;
}

}  // namespace wernerdec
