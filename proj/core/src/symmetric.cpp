#include "wernerdec/symmetric.hpp"

#include <stdexcept>

namespace wernerdec {

Rational alpha_ratio(int d) {
  if (d < 2) throw std::invalid_argument("alpha_ratio: local dimension must be >= 2");
  return Rational(d + 1) / Rational(d - 1);
}

RationalMatrix v_matrix(int m, int d) {
  if (m < 1) throw std::invalid_argument("v_matrix: m must be >= 1");
  const Rational neg_alpha = -alpha_ratio(d);
  RationalMatrix v(m + 1, m + 1);
  for (int a = 0; a <= m; ++a) {
    for (int b = 0; b <= m; ++b) {
      Rational s = 0;
      const int t_lo = std::max(0, a + b - m);
      const int t_hi = std::min(a, b);
      for (int t = t_lo; t <= t_hi; ++t)
        s += Rational(binomial(a, t) * binomial(m - a, b - t)) * rat_pow(neg_alpha, t);
      v(a, b) = (a % 2 == 0) ? s : -s;
    }
  }
  return v;
}

RationalMatrix v_vector(int n, const Rational& p, int d) {
  if (n < 1) throw std::invalid_argument("v_vector: n must be >= 1");
  if (p < 0 || p > 1) throw std::invalid_argument("v_vector: p outside [0, 1]");
  const Rational alpha = alpha_ratio(d);
  RationalMatrix v(n + 1, 1);
  for (int k = 0; k <= n; ++k)
    v(k, 0) = rat_pow(alpha, k) * rat_pow(Rational(1) - p, k) * rat_pow(p, n - k);
  return v;
}

Integer SpectrumTable::multiplicity(int k, int w) const {
  const Integer dsym = Integer(d) * (d + 1) / 2;
  const Integer dasym = Integer(d) * (d - 1) / 2;
  return binomial(n, k) * int_pow(dsym, n - k) * int_pow(dasym, k) * binomial(m, w) *
         int_pow(Integer(d) * d - 1, w);
}

Integer SpectrumTable::total_dimension() const { return int_pow(Integer(d), 2 * (n + m)); }

SpectrumTable hq_spectrum(const RationalMatrix& q, int n, int m, int d) {
  if (q.rows() != n + 1 || q.cols() != m + 1)
    throw std::invalid_argument("hq_spectrum: Q must be (n+1) x (m+1)");
  const RationalMatrix qv = q * v_matrix(m, d);
  const Rational dsym = Rational(d) * (d + 1) / 2;
  const Rational dasym = Rational(d) * (d - 1) / 2;
  SpectrumTable table;
  table.n = n;
  table.m = m;
  table.d = d;
  table.values = RationalMatrix(n + 1, m + 1);
  for (int k = 0; k <= n; ++k) {
    for (int w = 0; w <= m; ++w) {
      Rational den = Rational(binomial(n, k) * binomial(m, w)) * rat_pow(dsym, n - k) *
                     rat_pow(dasym, k) * rat_pow(Rational(d), m) * rat_pow(Rational(d + 1), w);
      table.values(k, w) = qv(k, w) / den;
    }
  }
  return table;
}

bool is_hq_positive(const RationalMatrix& q, int n, int m, int d) {
  if (q.rows() != n + 1 || q.cols() != m + 1)
    throw std::invalid_argument("is_hq_positive: Q must be (n+1) x (m+1)");
  return (q * v_matrix(m, d)).entrywise_nonnegative();
}

bool is_hq_ppt(const RationalMatrix& q, int n, int m, int d) {
  if (q.rows() != n + 1 || q.cols() != m + 1)
    throw std::invalid_argument("is_hq_ppt: Q must be (n+1) x (m+1)");
  return (q.transposed() * v_matrix(n, d)).entrywise_nonnegative();
}

RationalMatrix canonical_q(int n, int d) {
  if (n < 1) throw std::invalid_argument("canonical_q: n must be >= 1");
  if (d < 2) throw std::invalid_argument("canonical_q: local dimension must be >= 2");
  RationalMatrix q(n + 1, n + 1);
  const Integer dm = d - 1, dp = d + 1;
  q(0, 0) = Rational(dm * int_pow(dp, 2 * n));
  q(n, 0) = Rational(int_pow(dm, n) * int_pow(dp, n + 1));
  q(0, n) = q(n, 0);
  q(n, n) = -Rational(int_pow(dm, 2 * n) * dp);
  return q;
}

}  // namespace wernerdec
