#include "wernerdec/simplex.hpp"

#include <doctest.h>

using namespace wernerdec;

namespace {

SimplexRow ge(std::vector<Rational> coeffs, Rational rhs) {
  return SimplexRow{std::move(coeffs), std::move(rhs), false};
}
SimplexRow eq(std::vector<Rational> coeffs, Rational rhs) {
  return SimplexRow{std::move(coeffs), std::move(rhs), true};
}

}  // namespace

TEST_CASE("textbook maximization, rewritten as minimization") {
  // max 3x + 5y st x <= 4, 2y <= 12, 3x + 2y <= 18  ->  optimum 36 at (2, 6)
  const std::vector<Rational> c = {-3, -5};
  const std::vector<SimplexRow> rows = {
      ge({-1, 0}, -4),
      ge({0, -2}, -12),
      ge({-3, -2}, -18),
  };
  const SimplexResult res = solve_simplex(c, rows);
  REQUIRE(res.status == SimplexStatus::Optimal);
  CHECK(res.objective == -36);
  CHECK(res.x[0] == 2);
  CHECK(res.x[1] == 6);
}

TEST_CASE("equality constraints and exact fractional optima") {
  // min x + 2y st x + y = 1, x - y >= -1/3  ->  x = 1/3, y = 2/3 is NOT optimal;
  // minimum pushes y down: y >= (1-x)/..., check: objective = x + 2(1-x) = 2 - x,
  // minimized at the largest feasible x, which is 1 (y = 0). Value 1.
  const std::vector<Rational> c = {1, 2};
  const std::vector<SimplexRow> rows = {
      eq({1, 1}, 1),
      ge({1, -1}, Rational(-1) / 3),
  };
  const SimplexResult res = solve_simplex(c, rows);
  REQUIRE(res.status == SimplexStatus::Optimal);
  CHECK(res.objective == 1);
  CHECK(res.x[0] == 1);
  CHECK(res.x[1] == 0);
}

TEST_CASE("infeasibility is detected") {
  const std::vector<Rational> c = {1};
  const std::vector<SimplexRow> rows = {
      ge({1}, 2),
      ge({-1}, -1),  // x <= 1
  };
  CHECK(solve_simplex(c, rows).status == SimplexStatus::Infeasible);
}

TEST_CASE("unboundedness is detected") {
  const std::vector<Rational> c = {-1};
  const std::vector<SimplexRow> rows = {ge({1}, 0)};
  CHECK(solve_simplex(c, rows).status == SimplexStatus::Unbounded);
}

TEST_CASE("degenerate cascade still terminates at the optimum") {
  // Many zero-rhs rows around the origin; optimum at a vertex of the simplex
  // x + y + z = 1 intersected with x >= y >= z >= 0.
  const std::vector<Rational> c = {0, 0, -1};
  const std::vector<SimplexRow> rows = {
      ge({1, -1, 0}, 0),
      ge({0, 1, -1}, 0),
      ge({0, 0, 1}, 0),
      eq({1, 1, 1}, 1),
  };
  const SimplexResult res = solve_simplex(c, rows);
  REQUIRE(res.status == SimplexStatus::Optimal);
  CHECK(res.objective == Rational(-1) / 3);
  CHECK(res.x[0] == Rational(1) / 3);
  CHECK(res.x[1] == Rational(1) / 3);
  CHECK(res.x[2] == Rational(1) / 3);
}
