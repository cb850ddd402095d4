#pragma once

#include <complex>

#include <Eigen/Dense>

#include "ionsim/errors.hpp"

namespace ionsim {

using Complex = std::complex<double>;

enum class Qubit : int { g = 0, e = 1 };

// Truncation bounds of the qubit (x) phonon (x) photon product basis |i,m,n>.
// Phonon numbers run m = 0..phonon_cutoff-1, photon numbers n = 0..photon_cutoff-1.
struct SpaceDims {
  int phonon_cutoff;
  int photon_cutoff;

  static constexpr int kQubitDim = 2;

  SpaceDims(int phonon_cut, int photon_cut);

  int total() const { return kQubitDim * phonon_cutoff * photon_cutoff; }

  bool operator==(const SpaceDims&) const = default;
};

struct BasisTriple {
  Qubit i;
  int m;
  int n;
  bool operator==(const BasisTriple&) const = default;
};

// Canonical flat index, row-major with i outermost, then m, then n.
int basis_index(const SpaceDims& dims, Qubit i, int m, int n);
BasisTriple basis_unindex(const SpaceDims& dims, int flat);

// Complex amplitudes over the basis |i,m,n>, unit Euclidean norm.
class StateVector {
 public:
  // Validates |norm - 1| <= 1e-12.
  static StateVector unit(const SpaceDims& dims, Eigen::VectorXcd amplitudes);
  // Rescales the given amplitudes to unit norm.
  static StateVector normalized(const SpaceDims& dims, Eigen::VectorXcd amplitudes);
  static StateVector basis_state(const SpaceDims& dims, Qubit i, int m, int n);

  const SpaceDims& dims() const { return dims_; }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  Complex amp(Qubit i, int m, int n) const { return amps_[basis_index(dims_, i, m, n)]; }
  double norm() const { return amps_.norm(); }

 private:
  StateVector(const SpaceDims& dims, Eigen::VectorXcd amps)
      : dims_(dims), amps_(std::move(amps)) {}

  SpaceDims dims_;
  Eigen::VectorXcd amps_;
};

// Ladder and Pauli operators acting on the full product space, identity on the
// other two factors.  a lowers m with factor sqrt(m), b lowers n with sqrt(n),
// sigma_plus |g> = |e>, sigma_minus |e> = |g>.
struct LadderOps {
  Eigen::MatrixXcd phonon_annihilator;
  Eigen::MatrixXcd photon_annihilator;
  Eigen::MatrixXcd sigma_plus;
  Eigen::MatrixXcd sigma_minus;
};
LadderOps ladder_matrices(const SpaceDims& dims);

// Diagonal element <m| O_k |m> of the phonon-number-conserving operator
//   O_k = exp(-eta^2/2) sum_p (i eta)^{2p} a^dag^p a^p / (p! (p+k)!),
// i.e. exp(-eta^2/2) sum_{p=0}^{m} (-eta^2)^p m! / ((m-p)! p! (p+k)!).
// The series terminates at p = m and is evaluated exactly.
double ok_diagonal_element(int m, int k, double eta);

// O_k on the full product space (diagonal in phonon number, identity on qubit
// and photon factors).
Eigen::MatrixXcd ok_matrix(const SpaceDims& dims, int k, double eta);

struct CoherentAmplitudes {
  Eigen::VectorXcd amplitudes;  // index = phonon number
  double deficit;               // 1 - sum |amp|^2, from the exact Poisson tail
};

// Coherent-state amplitudes exp(-|beta|^2/2) beta^m / sqrt(m!) for m < cutoff.
// Throws TruncationError (carrying the deficit) when the truncation deficit
// exceeds the tolerance.
CoherentAmplitudes coherent_amplitudes(Complex beta, int cutoff, double tolerance = 1e-9);

}  // namespace ionsim
