#include "wernerdec/mu.hpp"

#include <stdexcept>

namespace wernerdec {

namespace {

Eigen::MatrixXd partial_trace_first(const Eigen::MatrixXd& x, int da, int db) {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(db, db);
  for (int i = 0; i < da; ++i) out += x.block(i * db, i * db, db, db);
  return out;
}

}  // namespace

MapDescriptor map_from_choi(int da, int db, DenseSymmetric choi) {
  if (choi.dim() != da * db) throw std::invalid_argument("map_from_choi: side must be da*db");
  MapDescriptor out;
  out.da = da;
  out.db = db;
  out.image_of_identity = make_dense({db}, partial_trace_first(choi.mat, da, db));
  out.choi = std::move(choi);
  return out;
}

MapDescriptor werner_map(const WernerParam& wp) {
  return map_from_choi(wp.d, wp.d, werner_state(wp));
}

MapDescriptor transposed_werner_map(const WernerParam& wp) {
  return map_from_choi(wp.d, wp.d, partial_transpose(werner_state(wp), wp.d, wp.d));
}

MuResult mu_of_map(const MapDescriptor& p) {
  if (p.choi.mat.norm() == 0.0) throw std::invalid_argument("mu_of_map: zero Choi matrix");
  const Eigen::MatrixXd b =
      kron(Eigen::MatrixXd::Identity(p.da, p.da), p.image_of_identity.mat);
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> bsolver(b);
  const Eigen::VectorXd bvals = bsolver.eigenvalues();
  const double bmax = bvals.cwiseAbs().maxCoeff();
  if (bmax == 0.0) throw std::invalid_argument("mu_of_map: I (x) P(1) vanishes");
  const double support_cut = 1e-12 * bmax;

  std::vector<int> support;
  for (int i = 0; i < bvals.size(); ++i)
    if (bvals(i) > support_cut) support.push_back(i);

  MuResult result;
  result.support_restricted = static_cast<int>(support.size()) < bvals.size();
  if (result.support_restricted) {
    // Off the support -<I (x) P(1)> vanishes, so the operator lower bound for
    // positive maps forces <C_P> >= 0 there; anything else would mean an
    // unbounded ratio and a non-positive input.
    for (int i = 0; i < bvals.size(); ++i) {
      if (bvals(i) > support_cut) continue;
      const double diag = bsolver.eigenvectors().col(i).dot(p.choi.mat * bsolver.eigenvectors().col(i));
      if (diag < -1e-8 * std::max(1.0, p.choi.mat.norm()))
        throw std::domain_error("mu_of_map: Choi matrix is negative outside the support of I (x) P(1)");
    }
  }

  Eigen::MatrixXd basis(bvals.size(), static_cast<int>(support.size()));
  for (std::size_t c = 0; c < support.size(); ++c) basis.col(c) = bsolver.eigenvectors().col(support[c]);
  const Eigen::MatrixXd as = basis.transpose() * p.choi.mat * basis;
  Eigen::MatrixXd bs = Eigen::MatrixXd::Zero(basis.cols(), basis.cols());
  for (std::size_t c = 0; c < support.size(); ++c) bs(c, c) = bvals(support[c]);

  const Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> pencil(as, bs, Eigen::EigenvaluesOnly | Eigen::Ax_lBx);
  result.value = pencil.eigenvalues().minCoeff();
  return result;
}

Interval symmetrization_interval(const MapDescriptor& p) {
  const MuResult mu = mu_of_map(p);
  Interval out;
  if (mu.value >= 0.0) return out;  // completely positive range: nothing to symmetrize
  out.lower = 0.5 * (1.0 + mu.value);
  out.upper = 0.5;
  out.empty = false;
  return out;
}

bool check_block_positive_bounds(const MapDescriptor& p) {
  const Eigen::MatrixXd bound =
      kron(Eigen::MatrixXd::Identity(p.da, p.da), p.image_of_identity.mat);
  const double tol = 1e-10;
  return min_eigenvalue(p.choi.mat + bound) >= -tol &&
         min_eigenvalue(p.da * bound - p.choi.mat) >= -tol;
}

}  // namespace wernerdec
