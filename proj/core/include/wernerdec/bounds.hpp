#pragma once

#include "wernerdec/lp.hpp"
#include "wernerdec/rational.hpp"

#include <string>
#include <vector>

namespace wernerdec {

enum class RegionClass { NotPositive, PositiveNonDecomposable, Decomposable };

std::string to_string(RegionClass c);

/// ((d-1)/(d+1)) p1 p2 + (1-p1) p2 + p1 (1-p2) - (1-p1)(1-p2); the sign decides
/// decomposability of W_{p1} (x) (theta o W_{p2}).
Rational n1m1_criterion(int d, const Rational& p1, const Rational& p2);

/// An irrational threshold: float value plus an exact rational bracket.
struct BracketedReal {
  double value = 0.0;
  Rational lower, upper;
};

/// 1/(2 + sqrt(2d/(d+1))), the exact n=1 threshold; bracket width <= 1e-9.
BracketedReal threshold_n1(int d);

/// True iff ((d-1)/(d+1)) p1^n p2^n + (1-p1)^n p2^n + p1^n (1-p2)^n
/// - (1-p1)^n (1-p2)^n < 0 (exact), which certifies non-decomposability of
/// the n-th mixed tensor power.
bool analytic_nondecomp(int n, int d, const Rational& p1, const Rational& p2);

/// 1/(1 + (1 + sqrt(2d/(d+1)))^(1/n)); increasing in n, decreasing in d.
BracketedReal analytic_threshold(int n, int d);

/// The d -> infinity limit 1/(1 + (1 + sqrt 2)^(1/n)).
double analytic_threshold_limit(int n);

/// 2/(1 + (1 + sqrt(2d/(d+1)))^(1/floor(n/2))) - 1 for n >= 2; strictly
/// negative, increasing toward zero; a lower bound on max(mu(P), mu(theta o P))
/// for n-tensor-stable decomposable maps.
double quantitative_bound(int n, int d);

/// Positivity of W_{p1} (x) (theta o W_{p2}): 0 <= -t1 t2 - (t1 + t2) + 2
/// in the t-parametrization.
bool positivity_criterion(int d, const Rational& p1, const Rational& p2);
Rational positivity_criterion_value(int d, const Rational& p1, const Rational& p2);

/// Equal-parameter positivity threshold (2-sqrt(3))(d+1)/(2(d+1-sqrt(3))).
BracketedReal equal_p_positivity_threshold(int d);

/// Three-way classification at n = m = 1.
RegionClass classify_region(int d, const Rational& p1, const Rational& p2);

struct ThresholdResult {
  int n = 0, d = 0;
  Rational lower, upper;  // LP value < 0 at lower, >= 0 at upper
  Rational width() const { return upper - lower; }
};

/// Bisection with the exact LP sign oracle at n = m, p1 = p2 = p, starting
/// from [0, 1/2]; the returned bracket has width <= tol.
ThresholdResult lp_threshold(int n, int d, const Rational& tol);

struct Table1Row {
  int d = 0, n = 0;
  ThresholdResult numerical;
  BracketedReal analytic;
  std::string numerical_truncated;  // 4 digits, truncated
  std::string analytic_truncated;
};

/// All 32 cells (d in {2,3,5,10}, n in 1..8) in row-major order. The numerical
/// bracket is refined past tol until both ends truncate identically.
std::vector<Table1Row> compute_table1(const Rational& tol, int jobs);

}  // namespace wernerdec
