#include "ionsim/fock.hpp"

#include <cmath>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

namespace ionsim {

SpaceDims::SpaceDims(int phonon_cut, int photon_cut)
    : phonon_cutoff(phonon_cut), photon_cutoff(photon_cut) {
  if (phonon_cutoff < 1) throw PreconditionError("SpaceDims: phonon_cutoff must be >= 1");
  if (photon_cutoff < 1) throw PreconditionError("SpaceDims: photon_cutoff must be >= 1");
}

int basis_index(const SpaceDims& dims, Qubit i, int m, int n) {
  if (m < 0 || m >= dims.phonon_cutoff) {
    throw RangeError("basis_index: phonon number m = " + std::to_string(m) +
                     " outside [0, " + std::to_string(dims.phonon_cutoff) + ")");
  }
  if (n < 0 || n >= dims.photon_cutoff) {
    throw RangeError("basis_index: photon number n = " + std::to_string(n) +
                     " outside [0, " + std::to_string(dims.photon_cutoff) + ")");
  }
  return (static_cast<int>(i) * dims.phonon_cutoff + m) * dims.photon_cutoff + n;
}

BasisTriple basis_unindex(const SpaceDims& dims, int flat) {
  if (flat < 0 || flat >= dims.total()) {
    throw RangeError("basis_unindex: flat index " + std::to_string(flat) +
                     " outside [0, " + std::to_string(dims.total()) + ")");
  }
  const int n = flat % dims.photon_cutoff;
  const int m = (flat / dims.photon_cutoff) % dims.phonon_cutoff;
  const int i = flat / (dims.photon_cutoff * dims.phonon_cutoff);
  return BasisTriple{static_cast<Qubit>(i), m, n};
}

StateVector StateVector::unit(const SpaceDims& dims, Eigen::VectorXcd amplitudes) {
  if (amplitudes.size() != dims.total()) {
    throw PreconditionError("StateVector: amplitude length does not match dims");
  }
  const double nrm = amplitudes.norm();
  if (std::abs(nrm - 1.0) > 1e-12) {
    throw PreconditionError("StateVector: norm deviates from 1 by " +
                            std::to_string(std::abs(nrm - 1.0)));
  }
  return StateVector(dims, std::move(amplitudes));
}

StateVector StateVector::normalized(const SpaceDims& dims, Eigen::VectorXcd amplitudes) {
  if (amplitudes.size() != dims.total()) {
    throw PreconditionError("StateVector: amplitude length does not match dims");
  }
  const double nrm = amplitudes.norm();
  if (nrm <= 0.0) throw PreconditionError("StateVector: cannot normalize the zero vector");
  amplitudes /= nrm;
  return StateVector(dims, std::move(amplitudes));
}

StateVector StateVector::basis_state(const SpaceDims& dims, Qubit i, int m, int n) {
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(dims.total());
  amps[basis_index(dims, i, m, n)] = 1.0;
  return StateVector(dims, std::move(amps));
}

namespace {

Eigen::MatrixXcd annihilator(int cutoff) {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(cutoff, cutoff);
  for (int m = 1; m < cutoff; ++m) a(m - 1, m) = std::sqrt(static_cast<double>(m));
  return a;
}

Eigen::MatrixXcd kron3(const Eigen::MatrixXcd& q, const Eigen::MatrixXcd& ph,
                       const Eigen::MatrixXcd& c) {
  return Eigen::kroneckerProduct(q, Eigen::kroneckerProduct(ph, c).eval()).eval();
}

}  // namespace

LadderOps ladder_matrices(const SpaceDims& dims) {
  const Eigen::MatrixXcd i2 = Eigen::MatrixXcd::Identity(2, 2);
  const Eigen::MatrixXcd im = Eigen::MatrixXcd::Identity(dims.phonon_cutoff, dims.phonon_cutoff);
  const Eigen::MatrixXcd in = Eigen::MatrixXcd::Identity(dims.photon_cutoff, dims.photon_cutoff);

  Eigen::MatrixXcd sp = Eigen::MatrixXcd::Zero(2, 2);
  sp(static_cast<int>(Qubit::e), static_cast<int>(Qubit::g)) = 1.0;

  LadderOps ops;
  ops.phonon_annihilator = kron3(i2, annihilator(dims.phonon_cutoff), in);
  ops.photon_annihilator = kron3(i2, im, annihilator(dims.photon_cutoff));
  ops.sigma_plus = kron3(sp, im, in);
  ops.sigma_minus = kron3(sp.adjoint(), im, in);
  return ops;
}

double ok_diagonal_element(int m, int k, double eta) {
  if (m < 0) throw PreconditionError("ok_diagonal_element: m must be >= 0");
  if (k < 0) throw PreconditionError("ok_diagonal_element: k must be >= 0");
  if (eta < 0.0) throw PreconditionError("ok_diagonal_element: eta must be >= 0");
  // term_0 = 1/k!, term_{p+1} = term_p * (-eta^2)(m-p) / ((p+1)(p+k+1))
  double term = 1.0;
  for (int j = 2; j <= k; ++j) term /= static_cast<double>(j);
  double sum = term;
  for (int p = 0; p < m; ++p) {
    term *= -eta * eta * static_cast<double>(m - p) /
            (static_cast<double>(p + 1) * static_cast<double>(p + k + 1));
    sum += term;
  }
  return std::exp(-eta * eta / 2.0) * sum;
}

Eigen::MatrixXcd ok_matrix(const SpaceDims& dims, int k, double eta) {
  Eigen::VectorXcd diag(dims.phonon_cutoff);
  for (int m = 0; m < dims.phonon_cutoff; ++m) diag[m] = ok_diagonal_element(m, k, eta);
  const Eigen::MatrixXcd i2 = Eigen::MatrixXcd::Identity(2, 2);
  const Eigen::MatrixXcd in = Eigen::MatrixXcd::Identity(dims.photon_cutoff, dims.photon_cutoff);
  return kron3(i2, diag.asDiagonal(), in);
}

CoherentAmplitudes coherent_amplitudes(Complex beta, int cutoff, double tolerance) {
  if (cutoff < 1) throw PreconditionError("coherent_amplitudes: cutoff must be >= 1");

  CoherentAmplitudes out;
  out.amplitudes.resize(cutoff);
  const double norm2 = std::norm(beta);
  Complex amp = std::exp(-norm2 / 2.0);
  for (int m = 0; m < cutoff; ++m) {
    out.amplitudes[m] = amp;
    amp *= beta / std::sqrt(static_cast<double>(m + 1));
  }

  // Tail of the Poisson distribution, summed directly to avoid cancellation.
  double tail = 0.0;
  double pop = std::exp(-norm2);
  for (int m = 1; m <= cutoff; ++m) pop *= norm2 / static_cast<double>(m);
  for (int m = cutoff; pop > 0.0; ++m) {
    tail += pop;
    pop *= norm2 / static_cast<double>(m + 1);
    if (pop < tail * 1e-18 && m > cutoff + 4) break;
  }
  out.deficit = tail;

  if (out.deficit > tolerance) {
    throw TruncationError("coherent_amplitudes: truncation deficit " +
                              std::to_string(out.deficit) + " exceeds tolerance " +
                              std::to_string(tolerance),
                          out.deficit);
  }
  return out;
}

}  // namespace ionsim
