#include "wernerdec/bounds.hpp"

#include <doctest.h>

#include <cmath>

using namespace wernerdec;

TEST_CASE("n1m1 criterion values") {
  CHECK(n1m1_criterion(3, Rational(3, 10), Rational(3, 10)) == Rational(-1) / 40);
  CHECK(n1m1_criterion(2, Rational(1), Rational(0)) == 1);
  for (int d : {2, 3, 7}) {
    const Rational half(1, 2);
    CHECK(n1m1_criterion(d, half, half) ==
          Rational(d - 1) / (4 * Rational(d + 1)) + Rational(1) / 4);
  }
}

TEST_CASE("n = 1 threshold: float, bracket, truncation") {
  const BracketedReal t2 = threshold_n1(2);
  CHECK(t2.value == doctest::Approx(1.0 / (2.0 + std::sqrt(4.0 / 3.0))).epsilon(1e-15));
  CHECK(t2.upper - t2.lower <= Rational(1) / 1000000000);
  CHECK(to_double(t2.lower) <= t2.value);
  CHECK(to_double(t2.upper) >= t2.value);
  CHECK(format_truncated(t2.lower, 4) == "0.3169");
  CHECK(format_truncated(threshold_n1(3).lower, 4) == "0.3101");
  CHECK(format_truncated(threshold_n1(10).lower, 4) == "0.2986");
}

TEST_CASE("analytic non-decomposability certificate") {
  // n = 1 reduces to the sign of the n1m1 criterion.
  for (int d : {2, 3})
    for (int i = 0; i <= 10; ++i)
      for (int j = 0; j <= 10; ++j) {
        const Rational p1(i, 10), p2(j, 10);
        CHECK(analytic_nondecomp(1, d, p1, p2) == (n1m1_criterion(d, p1, p2) < 0));
      }
  CHECK(analytic_nondecomp(2, 2, Rational(2, 5), Rational(2, 5)));
  for (int n : {1, 2, 5})
    for (int d : {2, 3, 10}) CHECK_FALSE(analytic_nondecomp(n, d, Rational(1, 2), Rational(1, 2)));
}

TEST_CASE("analytic threshold family") {
  const BracketedReal a12 = analytic_threshold(1, 2);
  CHECK(a12.value == doctest::Approx(threshold_n1(2).value).epsilon(1e-15));
  CHECK(format_truncated(analytic_threshold(8, 2).lower, 4) == "0.4760");
  CHECK(format_truncated(analytic_threshold(2, 10).lower, 4) == "0.3948");

  for (int d : {2, 3, 10})
    for (int n = 1; n < 8; ++n)
      CHECK(analytic_threshold(n, d).value < analytic_threshold(n + 1, d).value);
  for (int n : {1, 3, 8}) {
    const double limit = analytic_threshold_limit(n);
    double previous = analytic_threshold(n, 2).value;
    for (int d : {3, 5, 10, 100}) {
      const double current = analytic_threshold(n, d).value;
      CHECK(current < previous);
      CHECK(current > limit);
      previous = current;
    }
  }
}

TEST_CASE("quantitative bound and its identity with the threshold") {
  CHECK(quantitative_bound(2, 2) == doctest::Approx(-0.3660254037844386).epsilon(1e-12));
  for (int d = 2; d <= 10; ++d)
    for (int k = 1; k <= 8; ++k)
      CHECK(std::abs(quantitative_bound(2 * k, d) - (2.0 * analytic_threshold(k, d).value - 1.0)) <
            1e-12);
  for (int d : {2, 5}) {
    double previous = quantitative_bound(2, d);
    CHECK(previous < 0);
    for (int n = 3; n <= 16; ++n) {
      const double current = quantitative_bound(n, d);
      CHECK(current >= previous);
      CHECK(current < 0);
      previous = current;
    }
  }
  CHECK_THROWS_AS(quantitative_bound(1, 2), std::domain_error);
}

TEST_CASE("positivity criterion") {
  CHECK(positivity_criterion_value(3, Rational(1, 5), Rational(1, 5)) == Rational(-13) / 81);
  CHECK_FALSE(positivity_criterion(3, Rational(1, 5), Rational(1, 5)));
  for (int d : {2, 3, 7, 100}) CHECK(positivity_criterion(d, Rational(1, 2), Rational(1, 2)));

  const BracketedReal edge = equal_p_positivity_threshold(3);
  const double s3 = std::sqrt(3.0);
  CHECK(edge.value == doctest::Approx((2.0 - s3) * 4.0 / (2.0 * (4.0 - s3))).epsilon(1e-15));
  CHECK(edge.upper - edge.lower <= Rational(1) / 1000000000);
  // Just below the threshold the map is not positive, just above it is.
  CHECK_FALSE(positivity_criterion(3, edge.lower, edge.lower));
  CHECK(positivity_criterion(3, edge.upper, edge.upper));
}

TEST_CASE("region classification") {
  CHECK(classify_region(3, Rational(27, 100), Rational(27, 100)) ==
        RegionClass::PositiveNonDecomposable);
  CHECK(classify_region(3, Rational(1, 2), Rational(1, 2)) == RegionClass::Decomposable);
  CHECK(classify_region(3, Rational(1, 10), Rational(1, 10)) == RegionClass::NotPositive);

  // No positive-but-non-decomposable points at d = 2 (coarse grid; the
  // acceptance suite runs the dense one).
  for (int i = 0; i <= 40; ++i)
    for (int j = 0; j <= 40; ++j)
      CHECK(classify_region(2, Rational(i, 40), Rational(j, 40)) !=
            RegionClass::PositiveNonDecomposable);

  // Decomposable implies positive.
  for (int d : {3, 5, 100})
    for (int i = 0; i <= 20; ++i)
      for (int j = 0; j <= 20; ++j) {
        const Rational p1(i, 20), p2(j, 20);
        if (n1m1_criterion(d, p1, p2) >= 0) CHECK(positivity_criterion(d, p1, p2));
      }
}

TEST_CASE("lp threshold bisection at n = 1") {
  const ThresholdResult t = lp_threshold(1, 2, Rational(1, 10000));
  CHECK(t.width() <= Rational(1, 10000));
  const double exact = threshold_n1(2).value;
  CHECK(to_double(t.lower) < exact);
  CHECK(to_double(t.upper) >= exact - 1e-12);
  CHECK_THROWS(lp_threshold(1, 2, Rational(0)));
}

TEST_CASE("region class names") {
  CHECK(to_string(RegionClass::NotPositive) == "NotPositive");
  CHECK(to_string(RegionClass::PositiveNonDecomposable) == "PositiveNonDecomposable");
  CHECK(to_string(RegionClass::Decomposable) == "Decomposable");
}
