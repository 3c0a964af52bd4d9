#include "wernerdec/simplex.hpp"

#include <stdexcept>

namespace wernerdec {

namespace {

constexpr int kDegenerateStreakLimit = 60;

class Tableau {
 public:
  Tableau(const std::vector<Rational>& objective, const std::vector<SimplexRow>& rows)
      : structural_(static_cast<int>(objective.size())), cost_(objective) {
    const int m = static_cast<int>(rows.size());
    int slacks = 0, artificials = 0;
    for (const auto& row : rows) {
      if (!row.equality) ++slacks;
      if (row.equality || row.rhs > 0) ++artificials;
    }
    first_artificial_ = structural_ + slacks;
    width_ = first_artificial_ + artificials;

    rows_.reserve(m);
    basis_.reserve(m);
    int slack_at = structural_;
    int art_at = first_artificial_;
    for (const auto& row : rows) {
      if (static_cast<int>(row.coeffs.size()) != structural_)
        throw std::invalid_argument("solve_simplex: row width mismatch");
      std::vector<Rational> r(width_ + 1);  // rhs kept in the last slot
      if (!row.equality && row.rhs <= 0) {
        // a.x >= rhs with rhs <= 0: store as -a.x + s = -rhs, slack is basic.
        for (int j = 0; j < structural_; ++j) r[j] = -row.coeffs[j];
        r[width_] = -row.rhs;
        r[slack_at] = 1;
        basis_.push_back(slack_at++);
      } else if (!row.equality) {
        // a.x >= rhs > 0: surplus plus a basic artificial.
        for (int j = 0; j < structural_; ++j) r[j] = row.coeffs[j];
        r[width_] = row.rhs;
        r[slack_at++] = -1;
        r[art_at] = 1;
        basis_.push_back(art_at++);
      } else {
        // equality, sign-normalized to rhs >= 0, basic artificial.
        const Rational s = row.rhs < 0 ? Rational(-1) : Rational(1);
        for (int j = 0; j < structural_; ++j) r[j] = s * row.coeffs[j];
        r[width_] = s * row.rhs;
        r[art_at] = 1;
        basis_.push_back(art_at++);
      }
      rows_.push_back(std::move(r));
    }
  }

  SimplexResult solve() {
    SimplexResult result;
    if (first_artificial_ < width_) {
      std::vector<Rational> phase1(width_, Rational(0));
      for (int j = first_artificial_; j < width_; ++j) phase1[j] = 1;
      const Rational value = run(phase1, /*ban_artificials=*/false, result.pivots);
      if (unbounded_) throw std::logic_error("solve_simplex: phase 1 reported unbounded");
      if (value != 0) {
        result.status = SimplexStatus::Infeasible;
        return result;
      }
      evict_basic_artificials(result.pivots);
    }
    std::vector<Rational> cost = cost_;
    cost.resize(width_, Rational(0));
    const Rational value = run(cost, /*ban_artificials=*/true, result.pivots);
    if (unbounded_) {
      result.status = SimplexStatus::Unbounded;
      return result;
    }
    result.status = SimplexStatus::Optimal;
    result.objective = value;
    result.x.assign(structural_, Rational(0));
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (basis_[i] < structural_) result.x[basis_[i]] = rows_[i][width_];
    return result;
  }

 private:
  // Runs the current cost vector to optimality and returns its value.
  Rational run(const std::vector<Rational>& cost, bool ban_artificials, long& pivots) {
    unbounded_ = false;
    std::vector<Rational> z(cost);
    z.push_back(Rational(0));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational f = z[basis_[i]];
      if (f != 0) axpy(z, rows_[i], f);
    }
    int degenerate_streak = 0;
    while (true) {
      const bool bland = degenerate_streak > kDegenerateStreakLimit;
      const int limit = ban_artificials ? first_artificial_ : width_;
      int col = -1;
      if (bland) {
        for (int j = 0; j < limit; ++j)
          if (z[j] < 0) {
            col = j;
            break;
          }
      } else {
        const Rational* best = nullptr;
        for (int j = 0; j < limit; ++j)
          if (z[j] < 0 && (best == nullptr || z[j] < *best)) {
            best = &z[j];
            col = j;
          }
      }
      if (col < 0) return -z[width_];

      int row = -1;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational& a = rows_[i][col];
        if (a <= 0) continue;
        Rational ratio = rows_[i][width_] / a;
        if (row < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[row])) {
          best_ratio = std::move(ratio);
          row = static_cast<int>(i);
        }
      }
      if (row < 0) {
        unbounded_ = true;
        return Rational(0);
      }
      degenerate_streak = best_ratio == 0 ? degenerate_streak + 1 : 0;
      pivot(row, col, pivots);
      const Rational f = z[col];
      if (f != 0) axpy(z, rows_[row], f);
    }
  }

  // target -= factor * source
  static void axpy(std::vector<Rational>& target, const std::vector<Rational>& source,
                   const Rational& factor) {
    for (std::size_t j = 0; j < target.size(); ++j)
      if (source[j] != 0) target[j] -= factor * source[j];
  }

  void pivot(int row, int col, long& pivots) {
    ++pivots;
    auto& prow = rows_[row];
    if (prow[col] != 1) {
      const Rational inv = Rational(1) / prow[col];
      for (auto& e : prow)
        if (e != 0) e *= inv;
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (static_cast<int>(i) == row) continue;
      const Rational f = rows_[i][col];
      if (f != 0) axpy(rows_[i], prow, f);
    }
    basis_[row] = col;
  }

  // Artificials left basic at level zero after phase 1 are pivoted out where
  // possible; a row without any usable entry is redundant and keeps its
  // artificial, which is harmless once the column is banned in phase 2.
  void evict_basic_artificials(long& pivots) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] < first_artificial_) continue;
      for (int j = 0; j < first_artificial_; ++j)
        if (rows_[i][j] != 0) {
          pivot(static_cast<int>(i), j, pivots);
          break;
        }
    }
  }

  int structural_;
  int width_ = 0;
  int first_artificial_ = 0;
  bool unbounded_ = false;
  std::vector<Rational> cost_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<int> basis_;
};

}  // namespace

SimplexResult solve_simplex(const std::vector<Rational>& objective, const std::vector<SimplexRow>& rows) {
  Tableau tableau(objective, rows);
  return tableau.solve();
}

}  // namespace wernerdec
