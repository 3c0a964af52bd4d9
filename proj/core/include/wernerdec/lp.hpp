#pragma once

#include "wernerdec/rational_matrix.hpp"

namespace wernerdec {

enum class LPStatus { Optimal, Infeasible, Unbounded };

/// The decomposability program for W_{p1}^{(x)n} (x) (theta o W_{p2})^{(x)m}:
/// minimize <v^n_{p1}| Q |v^m_{p2}> over Q in R^{(n+1)x(m+1)} subject to
/// Q V^m_d >= 0 and Q^T V^n_d >= 0 entrywise and sum(Q) = 1.
struct LPInstance {
  int n = 0, m = 0, d = 0;
  Rational p1, p2;
  RationalMatrix v1, v2;  // objective vectors v^n_{p1}, v^m_{p2} (columns)
  RationalMatrix vn, vm;  // constraint matrices V^n_d, V^m_d

  int variable_count() const { return (n + 1) * (m + 1); }
  int inequality_count() const { return 2 * (n + 1) * (m + 1); }
  int constraint_count() const { return inequality_count() + 1; }
  Rational objective_coefficient(int k, int l) const { return v1(k, 0) * v2(l, 0); }
};

struct LPOutcome {
  LPStatus status = LPStatus::Optimal;
  Rational value;            // exact optimal value when status == Optimal
  RationalMatrix witness_q;  // optimizer; a vertex of the feasible polytope
  long pivots = 0;
};

LPInstance build_lp(int n, int m, int d, const Rational& p1, const Rational& p2);

/// Exact rational simplex solve. The feasible set is the trace-one slice of a
/// pointed cone, hence nonempty (the corner witness is feasible) and bounded,
/// so the expected status is Optimal; other statuses indicate a construction bug.
LPOutcome solve_lp(const LPInstance& inst);

struct DecompositionDecision {
  bool decomposable = false;
  bool boundary = false;  // optimal value is exactly zero
  Rational value;
  RationalMatrix witness_q;
};

/// True iff the optimal value is >= 0 (exact comparison); a zero value is
/// classified decomposable and flagged as boundary.
DecompositionDecision is_decomposable_werner(int n, int m, int d, const Rational& p1,
                                             const Rational& p2);

}  // namespace wernerdec
