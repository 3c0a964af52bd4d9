#include "wernerdec/dense.hpp"

#include <stdexcept>

#if defined(WERNERDEC_HAVE_LAPACKE)
#include <lapacke.h>
#endif

namespace wernerdec {

DenseSymmetric make_dense(std::vector<int> factors, Eigen::MatrixXd mat) {
  long long side = 1;
  for (int f : factors) side *= f;
  if (mat.rows() != mat.cols() || side != mat.rows())
    throw std::invalid_argument("make_dense: factor product does not match matrix side");
  return DenseSymmetric{std::move(factors), std::move(mat)};
}

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Eigen::VectorXd symmetric_eigenvalues(const Eigen::MatrixXd& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("symmetric_eigenvalues: non-square input");
#if defined(WERNERDEC_HAVE_LAPACKE)
  if (a.rows() >= 512) {
    Eigen::MatrixXd work = a;
    Eigen::VectorXd values(a.rows());
    const lapack_int n = static_cast<lapack_int>(a.rows());
    const lapack_int info =
        LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'N', 'L', n, work.data(), n, values.data());
    if (info == 0) return values;
    // fall through to Eigen on LAPACK failure
  }
#endif
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

double min_eigenvalue(const Eigen::MatrixXd& a) {
  const Eigen::VectorXd values = symmetric_eigenvalues(a);
  return values(0);
}

double frobenius_distance(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return (a - b).norm();
}

}  // namespace wernerdec
