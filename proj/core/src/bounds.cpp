#include "wernerdec/bounds.hpp"

#include "wernerdec/werner.hpp"

#include <cmath>
#include <functional>
#include <future>
#include <stdexcept>

namespace wernerdec {

std::string to_string(RegionClass c) {
  switch (c) {
    case RegionClass::NotPositive: return "NotPositive";
    case RegionClass::PositiveNonDecomposable: return "PositiveNonDecomposable";
    case RegionClass::Decomposable: return "Decomposable";
  }
  throw std::logic_error("to_string: unknown RegionClass");
}

Rational n1m1_criterion(int d, const Rational& p1, const Rational& p2) {
  if (d < 2) throw std::invalid_argument("n1m1_criterion: local dimension must be >= 2");
  const Rational q1 = Rational(1) - p1, q2 = Rational(1) - p2;
  return Rational(d - 1) / Rational(d + 1) * p1 * p2 + q1 * p2 + p1 * q2 - q1 * q2;
}

bool analytic_nondecomp(int n, int d, const Rational& p1, const Rational& p2) {
  if (n < 1) throw std::invalid_argument("analytic_nondecomp: n must be >= 1");
  const Rational a = rat_pow(p1, n), b = rat_pow(Rational(1) - p1, n);
  const Rational c = rat_pow(p2, n), e = rat_pow(Rational(1) - p2, n);
  return Rational(d - 1) / Rational(d + 1) * a * c + b * c + a * e - b * e < 0;
}

namespace {

// Exact bisection of a sign function with f(lo) < 0 <= f(hi); the returned
// bracket has width <= tol and keeps the invariant sign(lo) < 0 <= sign(hi).
void bisect_sign(const std::function<int(const Rational&)>& f, Rational lo, Rational hi,
                 const Rational& tol, Rational& out_lo, Rational& out_hi) {
  while (hi - lo > tol) {
    const Rational mid = (lo + hi) / 2;
    if (f(mid) < 0)
      lo = mid;
    else
      hi = mid;
  }
  out_lo = lo;
  out_hi = hi;
}

// Sign of the equal-parameter criterion at tensor power n, cleared of the
// positive denominator (d+1).
int equal_p_criterion_sign(int n, int d, const Rational& p) {
  const Rational a = rat_pow(p, n), b = rat_pow(Rational(1) - p, n);
  const Rational value = Rational(d - 1) * a * a + 2 * Rational(d + 1) * a * b - Rational(d + 1) * b * b;
  return sign(value);
}

}  // namespace

BracketedReal threshold_n1(int d) { return analytic_threshold(1, d); }

BracketedReal analytic_threshold(int n, int d) {
  if (n < 1) throw std::invalid_argument("analytic_threshold: n must be >= 1");
  if (d < 2) throw std::invalid_argument("analytic_threshold: local dimension must be >= 2");
  BracketedReal out;
  out.value = 1.0 / (1.0 + std::pow(1.0 + std::sqrt(2.0 * d / (d + 1.0)), 1.0 / n));
  bisect_sign([n, d](const Rational& p) { return equal_p_criterion_sign(n, d, p); }, Rational(0),
              Rational(1, 2), Rational(1, Integer(1000000000)), out.lower, out.upper);
  return out;
}

double analytic_threshold_limit(int n) {
  return 1.0 / (1.0 + std::pow(1.0 + std::sqrt(2.0), 1.0 / n));
}

double quantitative_bound(int n, int d) {
  if (n < 2) throw std::domain_error("quantitative_bound: defined for n >= 2");
  if (d < 2) throw std::invalid_argument("quantitative_bound: local dimension must be >= 2");
  const int half = n / 2;
  return 2.0 / (1.0 + std::pow(1.0 + std::sqrt(2.0 * d / (d + 1.0)), 1.0 / half)) - 1.0;
}

Rational positivity_criterion_value(int d, const Rational& p1, const Rational& p2) {
  const Rational t1 = p_to_t(WernerParam(d, p1));
  const Rational t2 = p_to_t(WernerParam(d, p2));
  return -t1 * t2 - (t1 + t2) + 2;
}

bool positivity_criterion(int d, const Rational& p1, const Rational& p2) {
  return positivity_criterion_value(d, p1, p2) >= 0;
}

BracketedReal equal_p_positivity_threshold(int d) {
  if (d < 2) throw std::invalid_argument("equal_p_positivity_threshold: d must be >= 2");
  BracketedReal out;
  const double s3 = std::sqrt(3.0);
  out.value = (2.0 - s3) * (d + 1.0) / (2.0 * (d + 1.0 - s3));
  // The criterion value is increasing in p on [0, 1/2] (t_p is decreasing).
  bisect_sign(
      [d](const Rational& p) { return sign(positivity_criterion_value(d, p, p)); }, Rational(0),
      Rational(1, 2), Rational(1, Integer(1000000000)), out.lower, out.upper);
  return out;
}

RegionClass classify_region(int d, const Rational& p1, const Rational& p2) {
  if (!positivity_criterion(d, p1, p2)) return RegionClass::NotPositive;
  if (n1m1_criterion(d, p1, p2) >= 0) return RegionClass::Decomposable;
  return RegionClass::PositiveNonDecomposable;
}

ThresholdResult lp_threshold(int n, int d, const Rational& tol) {
  if (tol <= 0) throw std::invalid_argument("lp_threshold: tolerance must be positive");
  ThresholdResult out;
  out.n = n;
  out.d = d;
  Rational lo = 0, hi(1, 2);
  const auto lp_sign = [n, d](const Rational& p) {
    return sign(is_decomposable_werner(n, n, d, p, p).value);
  };
  if (lp_sign(lo) >= 0) throw std::logic_error("lp_threshold: expected a negative value at p = 0");
  if (lp_sign(hi) < 0) throw std::logic_error("lp_threshold: expected a nonnegative value at p = 1/2");
  bisect_sign(lp_sign, lo, hi, tol, out.lower, out.upper);
  return out;
}

std::vector<Table1Row> compute_table1(const Rational& tol, int jobs) {
  const std::vector<int> dims = {2, 3, 5, 10};
  constexpr int kMaxPower = 8;
  std::vector<Table1Row> rows(dims.size() * kMaxPower);

  const auto compute_cell = [&tol](int d, int n) {
    Table1Row row;
    row.d = d;
    row.n = n;
    row.numerical = lp_threshold(n, d, tol);
    // Refine until the bracket no longer straddles a truncation boundary.
    const Rational floor_width(1, Integer("1000000000000"));
    while (truncate_digits(row.numerical.lower, 4) != truncate_digits(row.numerical.upper, 4) &&
           row.numerical.width() > floor_width) {
      const Rational mid = (row.numerical.lower + row.numerical.upper) / 2;
      if (is_decomposable_werner(n, n, d, mid, mid).value < 0)
        row.numerical.lower = mid;
      else
        row.numerical.upper = mid;
    }
    row.analytic = analytic_threshold(n, d);
    row.numerical_truncated = format_truncated(row.numerical.upper, 4);
    row.analytic_truncated = format_truncated(row.analytic.lower, 4);
    return row;
  };

  if (jobs < 1) jobs = 1;
  std::vector<std::future<void>> workers;
  std::atomic<std::size_t> next{0};
  const auto work = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= rows.size()) return;
      const int d = dims[i / kMaxPower];
      const int n = static_cast<int>(i % kMaxPower) + 1;
      rows[i] = compute_cell(d, n);
    }
  };
  for (int j = 1; j < jobs; ++j) workers.push_back(std::async(std::launch::async, work));
  work();
  for (auto& w : workers) w.get();
  return rows;
}

}  // namespace wernerdec
