#include "wernerdec/oracle.hpp"

#include "wernerdec/selfcheck.hpp"
#include "wernerdec/werner.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace wernerdec;

TEST_CASE("single-placement cells reduce to plain tensor products") {
  for (int d : {2, 3}) {
    const PairProjectors proj = projectors(d);
    const double dsym = d * (d + 1) / 2.0;
    const double dasym = d * (d - 1) / 2.0;
    const Eigen::MatrixXd p0 = proj.p_sym.mat / dsym;
    const Eigen::MatrixXd p1 = proj.p_asym.mat / dasym;
    const Eigen::MatrixXd p0g = partial_transpose(make_dense({d, d}, p0), d, d).mat;
    const Eigen::MatrixXd p1g = partial_transpose(make_dense({d, d}, p1), d, d).mat;

    CHECK((oracle::dense_f(1, 1, 1, 1, d).mat - kron(p0, p0g)).norm() < 1e-14);
    CHECK((oracle::dense_f(2, 1, 1, 1, d).mat - kron(p1, p0g)).norm() < 1e-14);
    CHECK((oracle::dense_f(2, 2, 1, 1, d).mat - kron(p1, p1g)).norm() < 1e-14);
    if (d == 2)
      CHECK((oracle::dense_f(1, 1, 2, 1, d).mat - kron(kron(p0, p0), p0g)).norm() < 1e-14);
  }
}

TEST_CASE("every F(k, l) averages placements to unit trace") {
  for (int d : {2, 3})
    for (int n = 1; n <= 2; ++n)
      for (int m = 1; m <= 2; ++m)
        for (int k = 1; k <= n + 1; ++k)
          for (int l = 1; l <= m + 1; ++l)
            CHECK(oracle::dense_f(k, l, n, m, d).mat.trace() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("dense_hq assembles the weighted combination") {
  RationalMatrix q(2, 2);
  q(0, 0) = 1;
  const DenseSymmetric h = oracle::dense_hq(q, 1, 1, 2);
  CHECK((h.mat - oracle::dense_f(1, 1, 1, 1, 2).mat).norm() == 0.0);

  // Corner witness: dense positivity and dense PPT, as the exact predicates say.
  for (int d : {2, 3})
    for (int n = 1; n <= 2; ++n) {
      const RationalMatrix qc = canonical_q(n, d);
      const DenseSymmetric hq = oracle::dense_hq(qc, n, n, d);
      CHECK(min_eigenvalue(hq.mat) >= -1e-9 * to_double(qc(0, 0)));
      CHECK(min_eigenvalue(oracle::partial_transpose_pairs(hq).mat) >= -1e-9 * to_double(qc(0, 0)));
    }
}

TEST_CASE("spectrum equivalence on seeded random Q") {
  std::mt19937_64 gen(2024);
  for (const auto& [n, m, d] :
       {std::array<int, 3>{1, 1, 2}, {1, 2, 2}, {2, 1, 2}, {1, 1, 3}, {3, 1, 2}, {2, 2, 2}}) {
    for (int trial = 0; trial < 10; ++trial) {
      const RationalMatrix q = selfcheck::random_rational_matrix(n + 1, m + 1, gen);
      const auto closed = oracle::expand_spectrum(hq_spectrum(q, n, m, d));
      const Eigen::VectorXd dense = symmetric_eigenvalues(oracle::dense_hq(q, n, m, d).mat);
      REQUIRE(static_cast<Eigen::Index>(closed.size()) == dense.size());
      double worst = 0.0;
      for (std::size_t i = 0; i < closed.size(); ++i)
        worst = std::max(worst, std::abs(closed[i] - dense(static_cast<Eigen::Index>(i))));
      CHECK(worst <= 1e-9);
    }
  }
}

TEST_CASE("PPT predicate matches dense partial-transpose spectra") {
  std::mt19937_64 gen(99);
  for (const auto& [n, m, d] : {std::array<int, 3>{1, 1, 2}, {2, 1, 2}, {1, 2, 3}, {2, 2, 2}}) {
    for (int trial = 0; trial < 10; ++trial) {
      const RationalMatrix q = selfcheck::random_rational_matrix(n + 1, m + 1, gen);
      const DenseSymmetric h = oracle::dense_hq(q, n, m, d);
      CHECK(is_hq_ppt(q, n, m, d) ==
            (min_eigenvalue(oracle::partial_transpose_pairs(h).mat) >= -1e-10));
      CHECK(is_hq_positive(q, n, m, d) == (min_eigenvalue(h.mat) >= -1e-10));
    }
  }
}

TEST_CASE("partial transpose across pairs: omega blocks flip, involution") {
  const PairProjectors proj = projectors(2);
  const DenseSymmetric two_omegas = make_dense({2, 2, 2, 2}, kron(proj.omega.mat, proj.omega.mat));
  const DenseSymmetric flipped = oracle::partial_transpose_pairs(two_omegas);
  CHECK((flipped.mat - kron(proj.flip.mat, proj.flip.mat)).norm() == 0.0);
  CHECK((oracle::partial_transpose_pairs(flipped).mat - two_omegas.mat).norm() == 0.0);
}

TEST_CASE("pairing: dense trace against the closed form") {
  std::mt19937_64 gen(31);
  std::uniform_int_distribution<int> pnum(0, 20);
  int checks = 0;
  for (const auto& [n, m, d] : {std::array<int, 3>{1, 1, 2}, {1, 1, 3}, {2, 1, 2}, {1, 2, 2}}) {
    for (int trial = 0; trial < 25; ++trial) {
      const RationalMatrix q = selfcheck::random_rational_matrix(n + 1, m + 1, gen);
      const Rational p1(pnum(gen), 20), p2(pnum(gen), 20);
      const double dense = oracle::pairing_value(n, m, d, p1, p2, q);
      const double closed = to_double(oracle::pairing_value_closed(n, m, d, p1, p2, q));
      CHECK(std::abs(dense - closed) <= 1e-10);
      ++checks;
    }
  }
  CHECK(checks == 100);
}

TEST_CASE("haar twirl: determinism, invariance, analytic agreement") {
  const WernerParam wp(2, Rational(1) / 3);
  const DenseSymmetric rho = werner_state(wp);
  const DenseSymmetric a = oracle::haar_twirl_mc(rho, 2, 2000, 7);
  const DenseSymmetric b = oracle::haar_twirl_mc(rho, 2, 2000, 7);
  CHECK((a.mat - b.mat).norm() == 0.0);  // bit-identical for a fixed seed
  CHECK(frobenius_distance(a.mat, rho.mat) <= 5e-2);

  const PairProjectors proj = projectors(2);
  const DenseSymmetric omega_avg = oracle::haar_twirl_mc(proj.omega, 2, 10000, 11);
  CHECK(frobenius_distance(omega_avg.mat, (2.0 / 3.0) * proj.p_sym.mat) <= 5e-2);

  CHECK_THROWS_AS(oracle::haar_twirl_mc(rho, 2, 0, 1), std::invalid_argument);
}

TEST_CASE("resource guard") {
  CHECK(oracle::TensorIndex{2, 2, 2}.side() == 256);
  CHECK(oracle::TensorIndex{2, 2, 3}.side() == 6561);
  CHECK_NOTHROW(oracle::TensorIndex{2, 2, 3}.check_guard());
  RationalMatrix q(3, 4);
  CHECK_THROWS_AS(oracle::dense_hq(q, 2, 3, 3), oracle::ResourceLimitError);
  CHECK_THROWS_AS(oracle::dense_f(1, 1, 4, 4, 10), oracle::ResourceLimitError);
}
