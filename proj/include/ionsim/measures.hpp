#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ionsim/fock.hpp"
#include "ionsim/hermitian.hpp"

namespace ionsim {

// A: qubit, B: phonon, C: photon.
enum class Subsystem { A, B, C };

std::string subsystem_name(Subsystem s);

// Reduced density matrix of one subsystem.  Hermitian within 1e-12, trace 1
// within 1e-10; eigenvalues (validated >= -1e-10) are cached on first use.
class DensityMatrix {
 public:
  DensityMatrix(Subsystem label, Eigen::MatrixXcd rho);

  Subsystem label() const { return label_; }
  const Eigen::MatrixXcd& matrix() const { return rho_; }
  int dim() const { return static_cast<int>(rho_.rows()); }
  double trace() const { return trace_; }
  double purity() const;                       // tr rho^2
  const Eigen::VectorXd& eigenvalues() const;  // ascending
  Eigen::VectorXd populations() const { return rho_.diagonal().real(); }
  // number of eigenvalues above the support threshold (1e-9)
  int support_rank() const;

 private:
  Subsystem label_;
  Eigen::MatrixXcd rho_;
  double trace_;
  mutable std::optional<Eigen::VectorXd> evals_;
};

// rho^X = Tr_complement |psi><psi|
DensityMatrix reduce(const StateVector& psi, Subsystem keep);

// Index swap on the chosen subsystem only:
//   <i,m,n| rho^{T_A} |j,r,s> = <j,m,n| rho |i,r,s>   (and analogously for B, C)
HermitianOperator partial_transpose(const StateVector& psi, Subsystem subsystem);

// Modulus of the sum of negative partial-transpose eigenvalues; eigenvalues
// above -1e-12 are treated as numerical zeros.
double negativity(const StateVector& psi, Subsystem subsystem);

// Pure-state route: with Schmidt coefficients {lambda_i} across the cut,
// N = ((sum sqrt(lambda_i))^2 - 1) / 2.  Agrees with the partial-transpose
// route for the pure states this simulator produces, at a fraction of the cost.
double negativity_schmidt(const StateVector& psi, Subsystem subsystem);
double negativity_from_schmidt(const Eigen::VectorXd& reduced_eigenvalues);

// S_l = d/(d-1) (1 - tr rho^2) for d >= 2; 0 for the degenerate d = 1 case.
// Throws DimensionMismatchError when d is smaller than the support rank.
double linear_entropy(const DensityMatrix& rho, int d);
double linear_entropy_from(double purity, int support_rank, int d);

// d = max(2, smallest D such that at every sample the population on basis
// states with index >= D stays <= 1e-9).
int effective_mode_count(const std::vector<DensityMatrix>& trajectory);
int tail_mode_count(const Eigen::VectorXd& populations);

struct MeasureResult {
  double negativity = 0.0;
  double linear_entropy = 0.0;
  double purity = 1.0;
  int effective_d = 2;
};

// Bundle of all measures for one subsystem of a pure tripartite state; d is
// taken from the single-state trajectory when not supplied.
MeasureResult measure_subsystem(const StateVector& psi, Subsystem subsystem,
                                std::optional<int> d = std::nullopt);

}  // namespace ionsim
