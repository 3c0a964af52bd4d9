#include "wernerdec/oracle.hpp"

#include "wernerdec/werner.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <random>
#include <sstream>

namespace wernerdec::oracle {

long long TensorIndex::side() const {
  const long long pair = static_cast<long long>(d) * d;
  long long out = 1;
  for (int i = 0; i < n + m; ++i) {
    if (out > std::numeric_limits<long long>::max() / pair)
      return std::numeric_limits<long long>::max();
    out *= pair;
  }
  return out;
}

void TensorIndex::check_guard() const {
  if (n < 0 || m < 0 || n + m < 1) throw std::invalid_argument("TensorIndex: need n+m >= 1");
  if (d < 2) throw std::invalid_argument("TensorIndex: local dimension must be >= 2");
  if (side() > kMaxSide) {
    std::ostringstream msg;
    msg << "dense oracle limited to total dimension " << kMaxSide << "; requested " << side()
        << " (n=" << n << ", m=" << m << ", d=" << d << ")";
    throw ResourceLimitError(msg.str());
  }
}

namespace {

// acc += weight * kron(prefix, block); keeps peak memory at one full-size buffer.
void kron_accumulate(Eigen::MatrixXd& acc, const Eigen::MatrixXd& prefix,
                     const Eigen::MatrixXd& block, double weight) {
  const Eigen::Index b = block.rows();
  for (Eigen::Index i = 0; i < prefix.rows(); ++i)
    for (Eigen::Index j = 0; j < prefix.cols(); ++j) {
      const double f = weight * prefix(i, j);
      if (f != 0.0) acc.block(i * b, j * b, b, b) += f * block;
    }
}

void for_each_subset(int slots, int choose, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> chosen(choose);
  const std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == choose) {
      fn(chosen);
      return;
    }
    for (int i = start; i <= slots - (choose - depth); ++i) {
      chosen[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

struct PairBlocks {
  Eigen::MatrixXd p0, p1, p0g, p1g;  // normalized projectors and their partial transposes
};

PairBlocks pair_blocks(int d) {
  const PairProjectors proj = projectors(d);
  const double dsym = d * (d + 1) / 2.0;
  const double dasym = d * (d - 1) / 2.0;
  PairBlocks out;
  out.p0 = proj.p_sym.mat / dsym;
  out.p1 = proj.p_asym.mat / dasym;
  out.p0g = partial_transpose(make_dense({d, d}, out.p0), d, d).mat;
  out.p1g = partial_transpose(make_dense({d, d}, out.p1), d, d).mat;
  return out;
}

// Adds weight * F(k, l) (mean over placements) into acc.
void accumulate_f(Eigen::MatrixXd& acc, const PairBlocks& blocks, int k, int l, int n, int m,
                  double weight) {
  const double placements =
      to_double(Rational(binomial(n, k - 1) * binomial(m, l - 1)));
  const double per_placement = weight / placements;
  for_each_subset(n, k - 1, [&](const std::vector<int>& asym_slots) {
    for_each_subset(m, l - 1, [&](const std::vector<int>& tasym_slots) {
      std::vector<const Eigen::MatrixXd*> slot(n + m);
      for (int i = 0; i < n; ++i) slot[i] = &blocks.p0;
      for (int i : asym_slots) slot[i] = &blocks.p1;
      for (int j = 0; j < m; ++j) slot[n + j] = &blocks.p0g;
      for (int j : tasym_slots) slot[n + j] = &blocks.p1g;
      Eigen::MatrixXd prefix = Eigen::MatrixXd::Ones(1, 1);
      for (int s = 0; s + 1 < n + m; ++s) prefix = kron(prefix, *slot[s]);
      kron_accumulate(acc, prefix, *slot[n + m - 1], per_placement);
    });
  });
}

std::vector<int> pair_factors(int n, int m, int d) {
  std::vector<int> out;
  out.reserve(2 * (n + m));
  for (int i = 0; i < n + m; ++i) {
    out.push_back(d);
    out.push_back(d);
  }
  return out;
}

// Transposes one tensor factor in place-index terms.
Eigen::MatrixXd transpose_factor(const Eigen::MatrixXd& mat, const std::vector<int>& factors,
                                 std::size_t target) {
  long long stride = 1;
  for (std::size_t i = target + 1; i < factors.size(); ++i) stride *= factors[i];
  const long long extent = factors[target];
  const long long size = mat.rows();
  Eigen::MatrixXd out(size, size);
  for (long long r = 0; r < size; ++r) {
    const long long rd = (r / stride) % extent;
    for (long long c = 0; c < size; ++c) {
      const long long cd = (c / stride) % extent;
      out(r + (cd - rd) * stride, c + (rd - cd) * stride) = mat(r, c);
    }
  }
  return out;
}

class GaussianSampler {
 public:
  explicit GaussianSampler(std::uint64_t seed) : gen_(seed) {}

  // Marsaglia polar method; avoids implementation-defined library distributions.
  double operator()() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = uniform_pm1();
      v = uniform_pm1();
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    have_spare_ = true;
    return u * f;
  }

 private:
  double uniform_pm1() {
    // 53-bit mantissa in [0, 1), shifted to (-1, 1)
    const double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    return 2.0 * u - 1.0;
  }

  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

Eigen::MatrixXcd haar_unitary(int d, GaussianSampler& normal) {
  Eigen::MatrixXcd g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = std::complex<double>(normal(), normal()) / std::sqrt(2.0);
  const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd u = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    const std::complex<double> rjj = r(j, j);
    const double mag = std::abs(rjj);
    u.col(j) *= mag == 0.0 ? 1.0 : rjj / mag;
  }
  return u;
}

}  // namespace

DenseSymmetric dense_f(int k, int l, int n, int m, int d) {
  const TensorIndex index{n, m, d};
  index.check_guard();
  if (k < 1 || k > n + 1 || l < 1 || l > m + 1)
    throw std::invalid_argument("dense_f: placement counts out of range");
  const long long size = index.side();
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(size, size);
  accumulate_f(acc, pair_blocks(d), k, l, n, m, 1.0);
  return make_dense(pair_factors(n, m, d), std::move(acc));
}

DenseSymmetric dense_hq(const RationalMatrix& q, int n, int m, int d) {
  const TensorIndex index{n, m, d};
  index.check_guard();
  if (q.rows() != n + 1 || q.cols() != m + 1)
    throw std::invalid_argument("dense_hq: Q must be (n+1) x (m+1)");
  const long long size = index.side();
  const PairBlocks blocks = pair_blocks(d);
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(size, size);
  for (int k = 1; k <= n + 1; ++k)
    for (int l = 1; l <= m + 1; ++l) {
      const double weight = to_double(q(k - 1, l - 1));
      if (weight != 0.0) accumulate_f(acc, blocks, k, l, n, m, weight);
    }
  return make_dense(pair_factors(n, m, d), std::move(acc));
}

DenseSymmetric partial_transpose_pairs(const DenseSymmetric& x) {
  if (x.factors.size() % 2 != 0)
    throw std::invalid_argument("partial_transpose_pairs: expected an even factor count");
  Eigen::MatrixXd mat = x.mat;
  for (std::size_t pair = 0; pair < x.factors.size() / 2; ++pair)
    mat = transpose_factor(mat, x.factors, 2 * pair + 1);
  return DenseSymmetric{x.factors, std::move(mat)};
}

double pairing_value(int n, int m, int d, const Rational& p1, const Rational& p2,
                     const RationalMatrix& q) {
  const TensorIndex index{n, m, d};
  index.check_guard();
  const DenseSymmetric hq = dense_hq(q, n, m, d);
  const Eigen::MatrixXd rho1 = werner_state(WernerParam(d, p1)).mat;
  const Eigen::MatrixXd rho2g =
      partial_transpose(werner_state(WernerParam(d, p2)), d, d).mat;
  Eigen::MatrixXd state = Eigen::MatrixXd::Ones(1, 1);
  for (int i = 0; i < n; ++i) state = kron(state, rho1);
  for (int j = 0; j < m; ++j) state = kron(state, rho2g);
  // Both operands are symmetric, so Tr[S H] is the entrywise sum.
  return state.cwiseProduct(hq.mat).sum();
}

Rational pairing_value_closed(int n, int m, int d, const Rational& p1, const Rational& p2,
                              const RationalMatrix& q) {
  const RationalMatrix v1 = v_vector(n, p1, d);
  const RationalMatrix v2 = v_vector(m, p2, d);
  const Rational scale = rat_pow(Rational(2) / (Rational(d) * (d + 1)), n + m);
  return scale * (v1.transposed() * q * v2)(0, 0);
}

DenseSymmetric haar_twirl_mc(const DenseSymmetric& x, int d, int samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("haar_twirl_mc: need at least one sample");
  if (x.dim() != d * d) throw std::invalid_argument("haar_twirl_mc: operand side must be d*d");
  GaussianSampler normal(seed);
  const Eigen::MatrixXcd xc = x.mat.cast<std::complex<double>>();
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(d * d, d * d);
  for (int s = 0; s < samples; ++s) {
    const Eigen::MatrixXcd u = haar_unitary(d, normal);
    Eigen::MatrixXcd uu(d * d, d * d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) uu.block(i * d, j * d, d, d) = u(i, j) * u;
    acc += uu * xc * uu.adjoint();
  }
  Eigen::MatrixXd avg = (acc / static_cast<double>(samples)).real();
  avg = 0.5 * (avg + avg.transpose()).eval();
  return make_dense({d, d}, std::move(avg));
}

std::vector<double> expand_spectrum(const SpectrumTable& table) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(table.total_dimension().convert_to<long long>()));
  for (int k = 0; k <= table.n; ++k)
    for (int w = 0; w <= table.m; ++w) {
      const long long mult = table.multiplicity(k, w).convert_to<long long>();
      const double value = to_double(table.value(k, w));
      out.insert(out.end(), mult, value);
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace wernerdec::oracle
