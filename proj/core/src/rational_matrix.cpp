#include "wernerdec/rational_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace wernerdec {

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols, Rational(0)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("RationalMatrix: negative shape");
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix out(n, n);
  for (int i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

RationalMatrix RationalMatrix::column(std::vector<Rational> entries) {
  RationalMatrix out(static_cast<int>(entries.size()), 1);
  for (int i = 0; i < out.rows(); ++i) out(i, 0) = std::move(entries[i]);
  return out;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("RationalMatrix: shape mismatch in product");
  RationalMatrix out(rows_, rhs.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (a == 0) continue;
      for (int c = 0; c < rhs.cols_; ++c) out(r, c) += a * rhs(k, c);
    }
  return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("RationalMatrix: shape mismatch in sum");
  RationalMatrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += rhs.entries_[i];
  return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("RationalMatrix: shape mismatch in difference");
  RationalMatrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] -= rhs.entries_[i];
  return out;
}

RationalMatrix RationalMatrix::scaled(const Rational& factor) const {
  RationalMatrix out = *this;
  for (auto& e : out.entries_) e *= factor;
  return out;
}

bool RationalMatrix::operator==(const RationalMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && entries_ == rhs.entries_;
}

RationalMatrix RationalMatrix::inverse() const {
  if (rows_ != cols_) throw std::domain_error("RationalMatrix: inverse of non-square matrix");
  const int n = rows_;
  RationalMatrix work = *this;
  RationalMatrix out = identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (work(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::domain_error("RationalMatrix: singular matrix");
    if (pivot != col)
      for (int c = 0; c < n; ++c) {
        std::swap(work(pivot, c), work(col, c));
        std::swap(out(pivot, c), out(col, c));
      }
    Rational inv = Rational(1) / work(col, col);
    for (int c = 0; c < n; ++c) {
      work(col, c) *= inv;
      out(col, c) *= inv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || work(r, col) == 0) continue;
      Rational f = work(r, col);
      for (int c = 0; c < n; ++c) {
        work(r, c) -= f * work(col, c);
        out(r, c) -= f * out(col, c);
      }
    }
  }
  return out;
}

Rational RationalMatrix::sum() const {
  Rational out = 0;
  for (const auto& e : entries_) out += e;
  return out;
}

bool RationalMatrix::entrywise_nonnegative() const {
  for (const auto& e : entries_)
    if (e < 0) return false;
  return true;
}

}  // namespace wernerdec
