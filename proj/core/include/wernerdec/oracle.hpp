#pragma once

#include "wernerdec/dense.hpp"
#include "wernerdec/rational_matrix.hpp"
#include "wernerdec/symmetric.hpp"

#include <cstdint>
#include <stdexcept>

namespace wernerdec::oracle {

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Factor layout (d (x) d)^(x)(n+m): pairs in order, the first n plain and the
/// final m partially transposed; the A|B bipartition is the odd factors.
struct TensorIndex {
  int n = 0, m = 0, d = 0;

  long long side() const;
  static constexpr long long kMaxSide = 6561;  // largest size the test suites drive
  void check_guard() const;                    // throws ResourceLimitError beyond kMaxSide
};

/// Mean over all placements of k-1 antisymmetric and l-1 partially transposed
/// antisymmetric normalized projectors (k, l are 1-based as in the closed-form
/// spectrum); every F(k, l) has unit trace.
DenseSymmetric dense_f(int k, int l, int n, int m, int d);

DenseSymmetric dense_hq(const RationalMatrix& q, int n, int m, int d);

/// Partial transpose across the A|B bipartition: transposes the second factor
/// of every d (x) d pair.
DenseSymmetric partial_transpose_pairs(const DenseSymmetric& x);

/// Tr[(rho_W(p1)^(x)n (x) (rho_W(p2)^Gamma)^(x)m) H_Q], computed densely.
double pairing_value(int n, int m, int d, const Rational& p1, const Rational& p2,
                     const RationalMatrix& q);

/// Exact counterpart: (2/(d(d+1)))^(n+m) <v^n_{p1}| Q |v^m_{p2}>.
Rational pairing_value_closed(int n, int m, int d, const Rational& p1, const Rational& p2,
                              const RationalMatrix& q);

/// Empirical UU-twirl over Haar unitaries sampled by QR of complex Ginibre
/// matrices with the R-diagonal phase fix; bit-deterministic for a fixed seed.
DenseSymmetric haar_twirl_mc(const DenseSymmetric& x, int d, int samples, std::uint64_t seed);

/// Closed-form eigenvalues expanded with multiplicities, ascending.
std::vector<double> expand_spectrum(const SpectrumTable& table);

}  // namespace wernerdec::oracle
