#pragma once

#include <Eigen/Dense>

#include "ionsim/errors.hpp"

namespace ionsim {

// Dense complex Hermitian matrix with an optional cached eigendecomposition
// (eigenvalues ascending, orthonormal eigenvectors).
class HermitianOperator {
 public:
  explicit HermitianOperator(Eigen::MatrixXcd matrix, double hermiticity_tol = 1e-12);

  const Eigen::MatrixXcd& matrix() const { return mat_; }
  int dim() const { return static_cast<int>(mat_.rows()); }

  void compute_eigensystem();
  bool has_eigensystem() const { return eig_done_; }
  const Eigen::VectorXd& eigenvalues() const;
  const Eigen::MatrixXcd& eigenvectors() const;

  // max-abs entry of V diag(lambda) V^dag - M; requires the eigensystem
  double reconstruction_error() const;

 private:
  Eigen::MatrixXcd mat_;
  Eigen::VectorXd evals_;
  Eigen::MatrixXcd evecs_;
  bool eig_done_ = false;
};

}  // namespace ionsim
