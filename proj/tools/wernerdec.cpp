// Command-line surface: threshold tables, region scans, single decisions,
// and the oracle verification suites.

#include "wernerdec/bounds.hpp"
#include "wernerdec/lp.hpp"
#include "wernerdec/selfcheck.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

namespace {

using nlohmann::json;
using namespace wernerdec;

struct RunConfig {
  int d = 3;
  int n = 1;
  int m = 1;
  std::string p1 = "0";
  std::string p2 = "0";
  int grid = 101;
  std::string tol = "1e-6";
  std::uint64_t seed = 1;
  std::string output_path;
  std::string format = "csv";
  int jobs = 0;
};

// Writes either to the requested path or to stdout.
void emit(const RunConfig& config, const std::string& payload) {
  if (config.output_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(config.output_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + config.output_path + "' for writing");
  out << payload;
  if (!out.good()) throw std::runtime_error("short write to '" + config.output_path + "'");
}

// Grid coordinates print as exact decimals when terminating, fractions otherwise.
std::string format_parameter(const Rational& p) {
  try {
    return format_exact_decimal(p);
  } catch (const std::domain_error&) {
    return format_fraction(p);
  }
}

int cmd_table1(const RunConfig& config) {
  const Rational tol = parse_rational(config.tol);
  const int jobs = config.jobs > 0 ? config.jobs
                                   : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  const auto rows = compute_table1(tol, jobs);
  std::ostringstream out;
  if (config.format == "csv") {
    out << "d,n,numerical_threshold,analytic_bound\n";
    for (const auto& row : rows)
      out << row.d << ',' << row.n << ',' << row.numerical_truncated << ','
          << row.analytic_truncated << '\n';
  } else {
    for (const auto& row : rows) {
      json record{{"d", row.d},
                  {"n", row.n},
                  {"numerical_threshold", row.numerical_truncated},
                  {"analytic_bound", row.analytic_truncated},
                  {"numerical_bracket_lower", format_fraction(row.numerical.lower)},
                  {"numerical_bracket_upper", format_fraction(row.numerical.upper)},
                  {"analytic_bracket_lower", format_fraction(row.analytic.lower)},
                  {"analytic_bracket_upper", format_fraction(row.analytic.upper)}};
      out << record.dump() << '\n';
    }
  }
  emit(config, out.str());
  return 0;
}

int cmd_region(const RunConfig& config) {
  if (config.grid < 2) throw std::runtime_error("region: grid must be >= 2");
  std::ostringstream out;
  const bool csv = config.format == "csv";
  if (csv) out << "p1,p2,class\n";
  for (int i = 0; i < config.grid; ++i) {
    const Rational p1 = Rational(i) / Rational(config.grid - 1);
    for (int j = 0; j < config.grid; ++j) {
      const Rational p2 = Rational(j) / Rational(config.grid - 1);
      const RegionClass cls = classify_region(config.d, p1, p2);
      if (csv) {
        out << format_parameter(p1) << ',' << format_parameter(p2) << ',' << to_string(cls) << '\n';
      } else {
        json record{{"p1", format_parameter(p1)}, {"p2", format_parameter(p2)}, {"class", to_string(cls)}};
        out << record.dump() << '\n';
      }
    }
  }
  emit(config, out.str());
  return 0;
}

std::string format_witness(const RationalMatrix& q) {
  std::ostringstream out;
  out << '[';
  for (int r = 0; r < q.rows(); ++r) {
    out << (r == 0 ? "[" : " [");
    for (int c = 0; c < q.cols(); ++c) out << (c == 0 ? "" : ", ") << format_fraction(q(r, c));
    out << (r + 1 == q.rows() ? "]" : "]\n");
  }
  out << ']';
  return out.str();
}

int cmd_decide(const RunConfig& config) {
  const Rational p1 = parse_rational(config.p1);
  const Rational p2 = parse_rational(config.p2);
  const DecompositionDecision decision =
      is_decomposable_werner(config.n, config.m, config.d, p1, p2);

  std::optional<Rational> n1m1;
  std::optional<bool> analytic, positive;
  if (config.n == config.m) analytic = analytic_nondecomp(config.n, config.d, p1, p2);
  if (config.n == 1 && config.m == 1) {
    n1m1 = n1m1_criterion(config.d, p1, p2);
    positive = positivity_criterion(config.d, p1, p2);
  }

  std::ostringstream out;
  if (config.format == "json") {
    json record{{"n", config.n},
                {"m", config.m},
                {"d", config.d},
                {"p1", format_fraction(p1)},
                {"p2", format_fraction(p2)},
                {"lp_value", format_fraction(decision.value)},
                {"decomposable", decision.decomposable},
                {"boundary", decision.boundary}};
    json witness = json::array();
    for (int r = 0; r < decision.witness_q.rows(); ++r) {
      json row = json::array();
      for (int c = 0; c < decision.witness_q.cols(); ++c)
        row.push_back(format_fraction(decision.witness_q(r, c)));
      witness.push_back(row);
    }
    record["witness_q"] = witness;
    if (n1m1) record["n1m1_criterion"] = format_fraction(*n1m1);
    if (analytic) record["analytic_nondecomposable"] = *analytic;
    if (positive) record["positive"] = *positive;
    out << record.dump() << '\n';
  } else {
    out << "map: W_p1^(x)" << config.n << " (x) (theta o W_p2)^(x)" << config.m
        << "  d=" << config.d << " p1=" << format_fraction(p1) << " p2=" << format_fraction(p2)
        << '\n';
    out << "lp_value: " << format_fraction(decision.value) << '\n';
    out << "decomposable: " << (decision.decomposable ? "yes" : "no")
        << (decision.boundary ? " (boundary: value is exactly zero)" : "") << '\n';
    out << "witness_q:\n" << format_witness(decision.witness_q) << '\n';
    if (n1m1) out << "n1m1_criterion: " << format_fraction(*n1m1) << '\n';
    if (analytic) out << "analytic_nondecomposable: " << (*analytic ? "yes" : "no") << '\n';
    if (positive) out << "positive: " << (*positive ? "yes" : "no") << '\n';
  }
  emit(config, out.str());
  return decision.decomposable ? 0 : 1;
}

int cmd_verify(const RunConfig& config, bool tol_given) {
  selfcheck::Options options;
  options.seed = config.seed;
  if (tol_given) {
    const double tol = to_double(parse_rational(config.tol));
    options.spectrum_tol = tol;
    options.pairing_tol = tol;
  }
  const auto suites = selfcheck::run_all(options);
  bool all_passed = true;
  std::ostringstream out;
  for (const auto& suite : suites) {
    all_passed = all_passed && suite.passed();
    out << (suite.passed() ? "[PASS] " : "[FAIL] ") << suite.name << ": " << suite.checks
        << " checks, " << suite.failures << " failures";
    if (suite.skipped > 0) out << ", " << suite.skipped << " skipped (resource guard)";
    if (!suite.note.empty()) out << " -- " << suite.note;
    out << '\n';
  }
  out << (all_passed ? "all suites passed\n" : "some suites FAILED\n");
  emit(config, out.str());
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact decomposability engine for mixed tensor powers of Werner maps"};
  app.require_subcommand(1);
  RunConfig config;

  auto* table1 = app.add_subcommand("table1", "Numerical vs analytic thresholds, d in {2,3,5,10}, n in 1..8");
  table1->add_option("--tol", config.tol, "bisection bracket width")->capture_default_str();
  table1->add_option("--jobs", config.jobs, "worker threads (default: hardware)");
  table1->add_option("--out", config.output_path, "output path (default: stdout)");
  table1->add_option("--format", config.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* region = app.add_subcommand("region", "Classify (p1, p2) on a uniform grid at n = m = 1");
  region->add_option("--d", config.d, "local dimension")->required()->check(CLI::Range(2, 1000000));
  region->add_option("--grid", config.grid, "points per axis")->capture_default_str();
  region->add_option("--out", config.output_path, "output path (default: stdout)");
  region->add_option("--format", config.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* decide = app.add_subcommand("decide", "Exact LP decision for one parameter point");
  decide->add_option("--d", config.d, "local dimension")->required()->check(CLI::Range(2, 1000000));
  decide->add_option("--n", config.n, "plain tensor power")->check(CLI::Range(1, 16));
  decide->add_option("--m", config.m, "transposed tensor power")->check(CLI::Range(1, 16));
  decide->add_option("--p1", config.p1, "parameter (decimal or a/b)")->required();
  decide->add_option("--p2", config.p2, "parameter (decimal or a/b)")->required();
  decide->add_option("--out", config.output_path, "output path (default: stdout)");
  decide->add_option("--format", config.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* verify = app.add_subcommand("verify", "Run the oracle equivalence suites");
  verify->add_option("--seed", config.seed, "random seed")->capture_default_str();
  auto* verify_tol = verify->add_option("--tol", config.tol, "override spectrum/pairing tolerance");
  verify->add_option("--out", config.output_path, "output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(table1)) return cmd_table1(config);
    if (app.got_subcommand(region)) return cmd_region(config);
    if (app.got_subcommand(decide)) return cmd_decide(config);
    if (app.got_subcommand(verify)) return cmd_verify(config, verify_tol->count() > 0);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
