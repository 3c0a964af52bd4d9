#pragma once

#include "wernerdec/rational.hpp"

#include <vector>

namespace wernerdec {

enum class SimplexStatus { Optimal, Infeasible, Unbounded };

struct SimplexRow {
  std::vector<Rational> coeffs;
  Rational rhs;
  bool equality = false;  // false: coeffs . x >= rhs
};

struct SimplexResult {
  SimplexStatus status = SimplexStatus::Optimal;
  Rational objective;
  std::vector<Rational> x;
  long pivots = 0;
};

/// Minimize objective . x subject to the given rows and x >= 0, in exact
/// rational arithmetic on a dense two-phase tableau.
///
/// Pivot column choice is Dantzig's rule with lowest-index tie-breaking; after
/// a long run of degenerate pivots it switches to Bland's rule until the next
/// improving pivot, so termination is guaranteed and the run is deterministic.
SimplexResult solve_simplex(const std::vector<Rational>& objective,
                            const std::vector<SimplexRow>& rows);

}  // namespace wernerdec
