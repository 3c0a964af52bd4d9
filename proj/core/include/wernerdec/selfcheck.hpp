#pragma once

#include "wernerdec/rational_matrix.hpp"

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace wernerdec::selfcheck {

struct Options {
  std::uint64_t seed = 1;
  double spectrum_tol = 1e-9;
  double pairing_tol = 1e-10;
  double mc_tol = 5e-2;
  int mc_samples = 10000;
  int random_draws = 10;       // random Q per shape
  long long dim_budget = 1024; // larger dense shapes are reported as skipped
};

struct SuiteResult {
  std::string name;
  int checks = 0;
  int failures = 0;
  int skipped = 0;
  std::string note;

  bool passed() const { return failures == 0; }
};

/// Uniform small rationals, numerators in [-9, 9], denominators in [1, 7].
RationalMatrix random_rational_matrix(int rows, int cols, std::mt19937_64& gen);

/// Shapes (n, m, d) with n + m <= 4 and d in {2, 3}, ordered by dense size.
std::vector<std::array<int, 3>> oracle_shapes();

SuiteResult spectrum_suite(const Options& options);
SuiteResult ppt_suite(const Options& options);
SuiteResult pairing_suite(const Options& options);
SuiteResult twirl_suite(const Options& options);
SuiteResult vertex_suite(const Options& options);
SuiteResult mu_suite(const Options& options);

std::vector<SuiteResult> run_all(const Options& options);

}  // namespace wernerdec::selfcheck
