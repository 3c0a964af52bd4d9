#include "wernerdec/werner.hpp"

#include <doctest.h>

#include <random>

using namespace wernerdec;

namespace {

Eigen::MatrixXd random_symmetric(int side, std::mt19937_64& gen) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd x(side, side);
  for (int i = 0; i < side; ++i)
    for (int j = 0; j < side; ++j) x(i, j) = normal(gen);
  return 0.5 * (x + x.transpose()).eval();
}

}  // namespace

TEST_CASE("projector traces and algebra") {
  const PairProjectors proj2 = projectors(2);
  CHECK(proj2.p_sym.mat.trace() == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(proj2.p_asym.mat.trace() == doctest::Approx(1.0).epsilon(1e-14));
  for (int d = 2; d <= 4; ++d) {
    const PairProjectors proj = projectors(d);
    CHECK((proj.p_sym.mat * proj.p_asym.mat).norm() == doctest::Approx(0.0).epsilon(1e-13));
    CHECK((proj.p_sym.mat * proj.p_sym.mat - proj.p_sym.mat).norm() < 1e-12);
    CHECK((proj.p_asym.mat * proj.p_asym.mat - proj.p_asym.mat).norm() < 1e-12);
    CHECK(proj.omega.mat.trace() == doctest::Approx(d).epsilon(1e-14));
    CHECK(proj.p_sym.mat.trace() == doctest::Approx(d * (d + 1) / 2.0).epsilon(1e-14));
    CHECK(proj.p_asym.mat.trace() == doctest::Approx(d * (d - 1) / 2.0).epsilon(1e-14));
  }
  const PairProjectors proj3 = projectors(3);
  // The flip fixes the maximally entangled projector, which lives in the
  // symmetric subspace.
  CHECK((proj3.flip.mat * proj3.omega.mat * proj3.flip.mat - proj3.omega.mat).norm() < 1e-13);
  CHECK((proj3.p_sym.mat * proj3.omega.mat - proj3.omega.mat).norm() < 1e-13);
  CHECK_THROWS_AS(projectors(1), std::invalid_argument);
}

TEST_CASE("werner states: endpoints, trace, spectrum, positivity") {
  const DenseSymmetric top = werner_state(WernerParam(2, Rational(1)));
  const PairProjectors proj = projectors(2);
  CHECK((top.mat - proj.p_sym.mat / 3.0).norm() < 1e-15);

  const DenseSymmetric quarter = werner_state(WernerParam(2, Rational(1) / 4));
  const Eigen::VectorXd spectrum = symmetric_eigenvalues(quarter.mat);
  CHECK(spectrum(0) == doctest::Approx(1.0 / 12).epsilon(1e-12));
  CHECK(spectrum(1) == doctest::Approx(1.0 / 12).epsilon(1e-12));
  CHECK(spectrum(2) == doctest::Approx(1.0 / 12).epsilon(1e-12));
  CHECK(spectrum(3) == doctest::Approx(3.0 / 4).epsilon(1e-12));

  for (int d = 2; d <= 4; ++d)
    for (int i = 0; i <= 10; ++i) {
      const DenseSymmetric rho = werner_state(WernerParam(d, Rational(i, 10)));
      CHECK(rho.mat.trace() == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(min_eigenvalue(rho.mat) >= -1e-12);
    }
  CHECK_THROWS_AS(werner_state(WernerParam(2, Rational(3) / 2)), std::invalid_argument);
}

TEST_CASE("partial transposition: flip/omega pair, involution, spectra") {
  for (int d = 2; d <= 4; ++d) {
    const PairProjectors proj = projectors(d);
    CHECK((partial_transpose(proj.omega, d, d).mat - proj.flip.mat).norm() == 0.0);
    CHECK((partial_transpose(proj.flip, d, d).mat - proj.omega.mat).norm() == 0.0);
  }
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 20; ++trial) {
    const DenseSymmetric x = make_dense({3, 3}, random_symmetric(9, gen));
    const DenseSymmetric back = partial_transpose(partial_transpose(x, 3, 3), 3, 3);
    CHECK((back.mat - x.mat).norm() == 0.0);
    CHECK(partial_transpose(x, 3, 3).mat.trace() == doctest::Approx(x.mat.trace()).epsilon(1e-13));
  }

  const DenseSymmetric low = werner_state(WernerParam(2, Rational(1) / 4));
  CHECK(min_eigenvalue(partial_transpose(low, 2, 2).mat) == doctest::Approx(-0.25).epsilon(1e-12));
  // PPT boundary sits exactly at p = 1/2.
  const DenseSymmetric half = werner_state(WernerParam(3, Rational(1) / 2));
  CHECK(std::abs(min_eigenvalue(partial_transpose(half, 3, 3).mat)) < 1e-12);

  CHECK_THROWS_AS(partial_transpose(low, 2, 3), std::invalid_argument);
}

TEST_CASE("twirl: invariance, projection, trace preservation") {
  for (int d : {2, 3}) {
    for (int i = 0; i <= 4; ++i) {
      const DenseSymmetric rho = werner_state(WernerParam(d, Rational(i, 4)));
      CHECK((twirl(rho, d).mat - rho.mat).norm() < 1e-13);
    }
    const PairProjectors proj = projectors(d);
    CHECK((twirl(proj.omega, d).mat - (2.0 / (d + 1)) * proj.p_sym.mat).norm() < 1e-13);
  }
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = trial % 2 == 0 ? 2 : 3;
    const DenseSymmetric x = make_dense({d, d}, random_symmetric(d * d, gen));
    const DenseSymmetric once = twirl(x, d);
    const DenseSymmetric twice = twirl(once, d);
    CHECK((twice.mat - once.mat).norm() <= 1e-12);
    CHECK(once.mat.trace() == doctest::Approx(x.mat.trace()).epsilon(1e-12));
  }
  const DenseSymmetric bad = make_dense({2, 3}, Eigen::MatrixXd::Zero(6, 6));
  CHECK_THROWS_AS(twirl(bad, 2), std::invalid_argument);
}

TEST_CASE("parametrization maps are inverse to each other") {
  for (int d : {2, 3, 5, 10}) {
    CHECK(p_to_t(WernerParam(d, Rational(1) / 2)) == Rational(1) / d);
    CHECK(p_to_t(WernerParam(d, Rational(0))) == 1);
    CHECK(t_to_p(d, Rational(1)) == 0);
    for (int i = 0; i <= 10; ++i) {
      const Rational p(i, 10);
      CHECK(t_to_p(d, p_to_t(WernerParam(d, p))) == p);
    }
  }
  CHECK_THROWS_AS(t_to_p(3, Rational(2)), std::domain_error);
  CHECK_THROWS_AS(t_to_p(3, Rational(-2)), std::domain_error);
}
