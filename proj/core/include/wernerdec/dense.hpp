#pragma once

#include <Eigen/Dense>

#include <vector>

namespace wernerdec {

/// Real symmetric operator together with its tensor-factor layout.
/// The product of `factors` equals the matrix side.
struct DenseSymmetric {
  std::vector<int> factors;
  Eigen::MatrixXd mat;

  int dim() const { return static_cast<int>(mat.rows()); }
};

DenseSymmetric make_dense(std::vector<int> factors, Eigen::MatrixXd mat);

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

/// Eigenvalues of a symmetric matrix in ascending order. Uses the LAPACK
/// divide-and-conquer driver when available; Eigen otherwise.
Eigen::VectorXd symmetric_eigenvalues(const Eigen::MatrixXd& a);

double min_eigenvalue(const Eigen::MatrixXd& a);

double frobenius_distance(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

}  // namespace wernerdec
