#include "ionsim/hermitian.hpp"

#include <string>

namespace ionsim {

HermitianOperator::HermitianOperator(Eigen::MatrixXcd matrix, double hermiticity_tol)
    : mat_(std::move(matrix)) {
  if (mat_.rows() != mat_.cols()) {
    throw PreconditionError("HermitianOperator: matrix must be square");
  }
  const double dev = (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff();
  if (dev > hermiticity_tol) {
    throw PreconditionError("HermitianOperator: hermiticity deviation " + std::to_string(dev));
  }
}

void HermitianOperator::compute_eigensystem() {
  if (eig_done_) return;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(mat_);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("HermitianOperator: eigendecomposition failed");
  }
  evals_ = solver.eigenvalues();
  evecs_ = solver.eigenvectors();
  eig_done_ = true;
}

const Eigen::VectorXd& HermitianOperator::eigenvalues() const {
  if (!eig_done_) throw std::logic_error("HermitianOperator: eigensystem not computed");
  return evals_;
}

const Eigen::MatrixXcd& HermitianOperator::eigenvectors() const {
  if (!eig_done_) throw std::logic_error("HermitianOperator: eigensystem not computed");
  return evecs_;
}

double HermitianOperator::reconstruction_error() const {
  if (!eig_done_) throw std::logic_error("HermitianOperator: eigensystem not computed");
  const Eigen::MatrixXcd rebuilt = evecs_ * evals_.asDiagonal() * evecs_.adjoint();
  return (rebuilt - mat_).cwiseAbs().maxCoeff();
}

}  // namespace ionsim
