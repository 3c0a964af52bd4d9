#pragma once

#include "wernerdec/rational_matrix.hpp"

namespace wernerdec {

/// alpha_d = (d+1)/(d-1), the ratio d_sym/d_asym; requires d >= 2.
Rational alpha_ratio(int d);

/// The (m+1)x(m+1) sign-alternating binomial matrix V^m_d. Row a (0-based)
/// holds the coefficients of the polynomial (-1)^a (1+x)^(m-a) (1-alpha_d x)^a,
/// which is the identity the first/last-row tests pin down.
RationalMatrix v_matrix(int m, int d);

/// Column vector v^n_p with entries alpha_d^k (1-p)^k p^(n-k), k = 0..n.
RationalMatrix v_vector(int n, const Rational& p, int d);

/// Closed-form spectrum of H_Q. Cells are indexed by the antisymmetric slot
/// count k-1 (stored 0-based as `k`) and the non-maximally-entangled count w.
struct SpectrumTable {
  int n = 0, m = 0, d = 0;
  RationalMatrix values;  // (n+1) x (m+1), entry (k, w) 0-based

  const Rational& value(int k, int w) const { return values(k, w); }
  /// Eigenspace dimension of cell (k, w): C(n,k) d_sym^(n-k) d_asym^k C(m,w) (d^2-1)^w.
  Integer multiplicity(int k, int w) const;
  /// Sum of all multiplicities, d^(2(n+m)).
  Integer total_dimension() const;
};

SpectrumTable hq_spectrum(const RationalMatrix& q, int n, int m, int d);

/// H_Q is positive semidefinite iff Q V^m_d is entrywise nonnegative.
bool is_hq_positive(const RationalMatrix& q, int n, int m, int d);
/// H_Q has positive partial transpose iff Q^T V^n_d is entrywise nonnegative.
bool is_hq_ppt(const RationalMatrix& q, int n, int m, int d);

/// The corner witness matrix: (0,0) = (d-1)(d+1)^(2n), (n,0) = (0,n) =
/// (d-1)^n (d+1)^(n+1), (n,n) = -(d-1)^(2n) (d+1), zero elsewhere.
/// Feasible (positive and PPT) for every n >= 1, d >= 2.
RationalMatrix canonical_q(int n, int d);

}  // namespace wernerdec
