#pragma once

#include "wernerdec/rational.hpp"

#include <vector>

namespace wernerdec {

/// Dense matrix over exact rationals, row-major, 0-based indexing.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols);

  static RationalMatrix identity(int n);
  static RationalMatrix column(std::vector<Rational> entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int r, int c) { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& operator()(int r, int c) const { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }

  RationalMatrix transposed() const;
  RationalMatrix operator*(const RationalMatrix& rhs) const;
  RationalMatrix operator+(const RationalMatrix& rhs) const;
  RationalMatrix operator-(const RationalMatrix& rhs) const;
  RationalMatrix scaled(const Rational& factor) const;
  bool operator==(const RationalMatrix& rhs) const;

  /// Gauss-Jordan inverse; throws std::domain_error on singular input.
  RationalMatrix inverse() const;

  Rational sum() const;
  bool entrywise_nonnegative() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> entries_;
};

}  // namespace wernerdec
