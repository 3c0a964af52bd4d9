#include "wernerdec/werner.hpp"

#include <stdexcept>

namespace wernerdec {

WernerParam::WernerParam(int d_, Rational p_) : d(d_), p(std::move(p_)) {
  if (d < 2) throw std::invalid_argument("WernerParam: local dimension must be >= 2");
  if (p < 0 || p > 1) throw std::invalid_argument("WernerParam: p outside [0, 1]");
}

PairProjectors projectors(int d) {
  if (d < 2) throw std::invalid_argument("projectors: local dimension must be >= 2");
  const int dd = d * d;
  Eigen::MatrixXd flip = Eigen::MatrixXd::Zero(dd, dd);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) flip(j * d + i, i * d + j) = 1.0;
  Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(dd, dd);
  Eigen::VectorXd omega_vec = Eigen::VectorXd::Zero(dd);
  for (int i = 0; i < d; ++i) omega_vec(i * d + i) = 1.0;

  PairProjectors out;
  out.p_sym = make_dense({d, d}, 0.5 * (eye + flip));
  out.p_asym = make_dense({d, d}, 0.5 * (eye - flip));
  out.flip = make_dense({d, d}, std::move(flip));
  out.omega = make_dense({d, d}, omega_vec * omega_vec.transpose());
  return out;
}

DenseSymmetric werner_state(const WernerParam& wp) {
  const PairProjectors proj = projectors(wp.d);
  const double a = to_double(wp.p / wp.d_sym());
  const double b = to_double((Rational(1) - wp.p) / wp.d_asym());
  return make_dense({wp.d, wp.d}, a * proj.p_sym.mat + b * proj.p_asym.mat);
}

DenseSymmetric twirl(const DenseSymmetric& x, int d) {
  if (x.factors != std::vector<int>{d, d})
    throw std::invalid_argument("twirl: operand factors must be {d, d}");
  const PairProjectors proj = projectors(d);
  const double tsym = (x.mat.cwiseProduct(proj.p_sym.mat)).sum();
  const double tasym = (x.mat.cwiseProduct(proj.p_asym.mat)).sum();
  const double dsym = d * (d + 1) / 2.0;
  const double dasym = d * (d - 1) / 2.0;
  return make_dense({d, d}, (tsym / dsym) * proj.p_sym.mat + (tasym / dasym) * proj.p_asym.mat);
}

DenseSymmetric partial_transpose(const DenseSymmetric& x, int da, int db) {
  if (x.dim() != da * db)
    throw std::invalid_argument("partial_transpose: side does not equal da*db");
  Eigen::MatrixXd out(x.dim(), x.dim());
  for (int i = 0; i < da; ++i)
    for (int i2 = 0; i2 < da; ++i2)
      for (int j = 0; j < db; ++j)
        for (int j2 = 0; j2 < db; ++j2)
          out(i * db + j, i2 * db + j2) = x.mat(i * db + j2, i2 * db + j);
  return make_dense({da, db}, std::move(out));
}

Rational p_to_t(const WernerParam& wp) {
  const Rational num = Rational(wp.d + 1) - 2 * wp.p * wp.d;
  const Rational den = Rational(wp.d + 1) - 2 * wp.p;
  return num / den;  // den >= d - 1 > 0 on the parameter range
}

Rational t_to_p(int d, const Rational& t) {
  if (d < 2) throw std::invalid_argument("t_to_p: local dimension must be >= 2");
  if (t < -1 || t > 1) throw std::domain_error("t_to_p: t outside [-1, 1]");
  return Rational(d + 1) * (Rational(1) - t) / (2 * (Rational(d) - t));
}

}  // namespace wernerdec
