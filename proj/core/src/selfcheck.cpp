#include "wernerdec/selfcheck.hpp"

#include "wernerdec/dense.hpp"
#include "wernerdec/mu.hpp"
#include "wernerdec/oracle.hpp"
#include "wernerdec/polytope.hpp"
#include "wernerdec/symmetric.hpp"
#include "wernerdec/werner.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace wernerdec::selfcheck {

RationalMatrix random_rational_matrix(int rows, int cols, std::mt19937_64& gen) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 7);
  RationalMatrix out(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) out(r, c) = Rational(num(gen)) / Rational(den(gen));
  return out;
}

std::vector<std::array<int, 3>> oracle_shapes() {
  std::vector<std::array<int, 3>> shapes;
  for (int d : {2, 3})
    for (int n = 1; n <= 3; ++n)
      for (int m = 1; n + m <= 4; ++m) shapes.push_back({n, m, d});
  std::sort(shapes.begin(), shapes.end(), [](const auto& a, const auto& b) {
    return oracle::TensorIndex{a[0], a[1], a[2]}.side() < oracle::TensorIndex{b[0], b[1], b[2]}.side();
  });
  return shapes;
}

namespace {

double max_abs_difference(const std::vector<double>& a, const Eigen::VectorXd& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, std::abs(a[i] - b(static_cast<Eigen::Index>(i))));
  return worst;
}

}  // namespace

SuiteResult spectrum_suite(const Options& options) {
  SuiteResult result{"spectrum", 0, 0, 0, ""};
  std::mt19937_64 gen(options.seed);
  for (const auto& [n, m, d] : oracle_shapes()) {
    const oracle::TensorIndex index{n, m, d};
    if (index.side() > options.dim_budget) {
      result.skipped += options.random_draws;
      continue;
    }
    for (int t = 0; t < options.random_draws; ++t) {
      const RationalMatrix q = random_rational_matrix(n + 1, m + 1, gen);
      const auto closed = oracle::expand_spectrum(hq_spectrum(q, n, m, d));
      const Eigen::VectorXd dense = symmetric_eigenvalues(oracle::dense_hq(q, n, m, d).mat);
      ++result.checks;
      if (static_cast<Eigen::Index>(closed.size()) != dense.size() ||
          max_abs_difference(closed, dense) > options.spectrum_tol)
        ++result.failures;
    }
  }
  std::ostringstream note;
  note << "closed-form vs dense eigenvalues, tol " << options.spectrum_tol;
  result.note = note.str();
  return result;
}

SuiteResult ppt_suite(const Options& options) {
  SuiteResult result{"ppt", 0, 0, 0, "predicate vs dense partial-transpose spectrum"};
  std::mt19937_64 gen(options.seed + 1);
  for (const auto& [n, m, d] : oracle_shapes()) {
    const oracle::TensorIndex index{n, m, d};
    if (index.side() > options.dim_budget) {
      result.skipped += options.random_draws;
      continue;
    }
    for (int t = 0; t < options.random_draws; ++t) {
      const RationalMatrix q = random_rational_matrix(n + 1, m + 1, gen);
      const DenseSymmetric h = oracle::dense_hq(q, n, m, d);
      const bool dense_ppt = min_eigenvalue(oracle::partial_transpose_pairs(h).mat) >= -1e-10;
      const bool dense_pos = min_eigenvalue(h.mat) >= -1e-10;
      ++result.checks;
      if (dense_ppt != is_hq_ppt(q, n, m, d) || dense_pos != is_hq_positive(q, n, m, d))
        ++result.failures;
    }
  }
  return result;
}

SuiteResult pairing_suite(const Options& options) {
  SuiteResult result{"pairing", 0, 0, 0, "dense trace vs closed form"};
  std::mt19937_64 gen(options.seed + 2);
  std::uniform_int_distribution<int> pnum(0, 20);
  for (const auto& [n, m, d] : oracle_shapes()) {
    const oracle::TensorIndex index{n, m, d};
    if (index.side() > options.dim_budget) {
      result.skipped += options.random_draws;
      continue;
    }
    for (int t = 0; t < options.random_draws; ++t) {
      const RationalMatrix q = random_rational_matrix(n + 1, m + 1, gen);
      const Rational p1(pnum(gen), 20), p2(pnum(gen), 20);
      const double dense = oracle::pairing_value(n, m, d, p1, p2, q);
      const double closed = to_double(oracle::pairing_value_closed(n, m, d, p1, p2, q));
      ++result.checks;
      if (std::abs(dense - closed) > options.pairing_tol) ++result.failures;
    }
  }
  return result;
}

SuiteResult twirl_suite(const Options& options) {
  SuiteResult result{"twirl-mc", 0, 0, 0, ""};
  std::mt19937_64 gen(options.seed + 3);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int d : {2, 3}) {
    for (int t = 0; t < options.random_draws; ++t) {
      Eigen::MatrixXd x(d * d, d * d);
      for (int i = 0; i < d * d; ++i)
        for (int j = 0; j < d * d; ++j) x(i, j) = normal(gen);
      x = 0.5 * (x + x.transpose()).eval();
      x /= x.norm();
      const DenseSymmetric xs = make_dense({d, d}, x);
      const DenseSymmetric analytic = twirl(xs, d);
      const DenseSymmetric mc = oracle::haar_twirl_mc(xs, d, options.mc_samples, options.seed + 100 + t);
      ++result.checks;
      if (frobenius_distance(analytic.mat, mc.mat) > options.mc_tol) ++result.failures;
    }
  }
  std::ostringstream note;
  note << options.mc_samples << " samples, Frobenius tol " << options.mc_tol;
  result.note = note.str();
  return result;
}

SuiteResult vertex_suite(const Options&) {
  SuiteResult result{"vertices", 0, 0, 0, "exact extreme points for d in 2..10"};
  for (int d = 2; d <= 10; ++d) {
    ++result.checks;
    if (enumerate_vertices(build_system(d)) != reference_vertices(d)) ++result.failures;
  }
  return result;
}

SuiteResult mu_suite(const Options&) {
  SuiteResult result{"mu", 0, 0, 0, "pencil vs closed forms, tol 1e-10"};
  const double tol = 1e-10;
  for (int d : {2, 3, 5}) {
    for (int i = 0; i <= 10; ++i) {
      const Rational p(i, 10);
      const double pd = to_double(p);
      const double mu_w = mu_of_map(werner_map(WernerParam(d, p))).value;
      const double closed_w = std::min(2.0 * pd / (d + 1), 2.0 * (1.0 - pd) / (d - 1));
      const double mu_t = mu_of_map(transposed_werner_map(WernerParam(d, p))).value;
      const double closed_t = std::min(2.0 * pd - 1.0, (d + 1.0 - 2.0 * pd) / (d * d - 1.0));
      ++result.checks;
      if (std::abs(mu_w - closed_w) > tol || std::abs(mu_t - closed_t) > tol) ++result.failures;
    }
  }
  // Lower endpoint of the admissible range, attained at theta o W_0 for d = 2.
  ++result.checks;
  if (std::abs(mu_of_map(transposed_werner_map(WernerParam(2, Rational(0)))).value + 1.0) > tol)
    ++result.failures;
  return result;
}

std::vector<SuiteResult> run_all(const Options& options) {
  return {spectrum_suite(options), ppt_suite(options),    pairing_suite(options),
          twirl_suite(options),    vertex_suite(options), mu_suite(options)};
}

}  // namespace wernerdec::selfcheck
