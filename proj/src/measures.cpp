#include "ionsim/measures.hpp"

#include <cmath>

namespace ionsim {

namespace {
constexpr double kSupportThreshold = 1e-9;
constexpr double kNegativeEigZero = -1e-12;
}  // namespace

std::string subsystem_name(Subsystem s) {
  switch (s) {
    case Subsystem::A: return "A";
    case Subsystem::B: return "B";
    case Subsystem::C: return "C";
  }
  throw std::logic_error("subsystem_name: bad subsystem");
}

DensityMatrix::DensityMatrix(Subsystem label, Eigen::MatrixXcd rho)
    : label_(label), rho_(std::move(rho)) {
  if (rho_.rows() != rho_.cols()) throw PreconditionError("DensityMatrix: must be square");
  const double herm = (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > 1e-12) {
    throw PreconditionError("DensityMatrix: hermiticity deviation " + std::to_string(herm));
  }
  trace_ = rho_.trace().real();
  if (std::abs(trace_ - 1.0) > 1e-10) {
    throw PreconditionError("DensityMatrix: trace deviates from 1 by " +
                            std::to_string(std::abs(trace_ - 1.0)));
  }
}

double DensityMatrix::purity() const {
  // tr rho^2 = ||rho||_F^2 for Hermitian rho
  return rho_.squaredNorm();
}

const Eigen::VectorXd& DensityMatrix::eigenvalues() const {
  if (!evals_) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho_, Eigen::EigenvaluesOnly);
    evals_ = solver.eigenvalues();
    if (evals_->minCoeff() < -1e-10) {
      throw PreconditionError("DensityMatrix: negative eigenvalue " +
                              std::to_string(evals_->minCoeff()));
    }
  }
  return *evals_;
}

int DensityMatrix::support_rank() const {
  return static_cast<int>((eigenvalues().array() > kSupportThreshold).count());
}

DensityMatrix reduce(const StateVector& psi, Subsystem keep) {
  const SpaceDims& dims = psi.dims();
  const int mc = dims.phonon_cutoff;
  const int nc = dims.photon_cutoff;
  const Eigen::VectorXcd& v = psi.amplitudes();
  const auto at = [&](int i, int m, int n) { return v[(i * mc + m) * nc + n]; };

  switch (keep) {
    case Subsystem::A: {
      Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(2, 2);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          for (int m = 0; m < mc; ++m)
            for (int n = 0; n < nc; ++n) rho(i, j) += at(i, m, n) * std::conj(at(j, m, n));
      return DensityMatrix(keep, std::move(rho));
    }
    case Subsystem::B: {
      Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(mc, mc);
      for (int m = 0; m < mc; ++m)
        for (int r = 0; r < mc; ++r)
          for (int i = 0; i < 2; ++i)
            for (int n = 0; n < nc; ++n) rho(m, r) += at(i, m, n) * std::conj(at(i, r, n));
      return DensityMatrix(keep, std::move(rho));
    }
    case Subsystem::C: {
      Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(nc, nc);
      for (int n = 0; n < nc; ++n)
        for (int s = 0; s < nc; ++s)
          for (int i = 0; i < 2; ++i)
            for (int m = 0; m < mc; ++m) rho(n, s) += at(i, m, n) * std::conj(at(i, m, s));
      return DensityMatrix(keep, std::move(rho));
    }
  }
  throw std::logic_error("reduce: bad subsystem");
}

HermitianOperator partial_transpose(const StateVector& psi, Subsystem subsystem) {
  const SpaceDims& dims = psi.dims();
  const int mc = dims.phonon_cutoff;
  const int nc = dims.photon_cutoff;
  const int d = dims.total();
  const Eigen::VectorXcd& v = psi.amplitudes();
  const auto at = [&](int i, int m, int n) { return v[(i * mc + m) * nc + n]; };

  Eigen::MatrixXcd pt(d, d);
  for (int row = 0; row < d; ++row) {
    const int n = row % nc;
    const int m = (row / nc) % mc;
    const int i = row / (nc * mc);
    for (int col = 0; col < d; ++col) {
      const int s = col % nc;
      const int r = (col / nc) % mc;
      const int j = col / (nc * mc);
      Complex val;
      switch (subsystem) {
        case Subsystem::A: val = at(j, m, n) * std::conj(at(i, r, s)); break;
        case Subsystem::B: val = at(i, r, n) * std::conj(at(j, m, s)); break;
        case Subsystem::C: val = at(i, m, s) * std::conj(at(j, r, n)); break;
      }
      pt(row, col) = val;
    }
  }
  return HermitianOperator(std::move(pt));
}

double negativity(const StateVector& psi, Subsystem subsystem) {
  HermitianOperator pt = partial_transpose(psi, subsystem);
  pt.compute_eigensystem();
  double sum = 0.0;
  for (int k = 0; k < pt.dim(); ++k) {
    const double lambda = pt.eigenvalues()[k];
    if (lambda < kNegativeEigZero) sum += -lambda;
  }
  return sum;
}

double negativity_from_schmidt(const Eigen::VectorXd& reduced_eigenvalues) {
  double s = 0.0;
  for (int k = 0; k < reduced_eigenvalues.size(); ++k) {
    s += std::sqrt(std::max(reduced_eigenvalues[k], 0.0));
  }
  return std::max(0.0, (s * s - 1.0) / 2.0);
}

double negativity_schmidt(const StateVector& psi, Subsystem subsystem) {
  return negativity_from_schmidt(reduce(psi, subsystem).eigenvalues());
}

double linear_entropy_from(double purity, int support_rank, int d) {
  if (d < 1) throw PreconditionError("linear_entropy: d must be >= 1");
  if (d < support_rank) {
    throw DimensionMismatchError("linear_entropy: d = " + std::to_string(d) +
                                 " smaller than support rank " + std::to_string(support_rank));
  }
  if (d == 1) return 0.0;  // degenerate case, state necessarily pure
  return static_cast<double>(d) / static_cast<double>(d - 1) * (1.0 - purity);
}

double linear_entropy(const DensityMatrix& rho, int d) {
  return linear_entropy_from(rho.purity(), rho.support_rank(), d);
}

int tail_mode_count(const Eigen::VectorXd& populations) {
  // smallest D with sum of populations at indices >= D at or below threshold
  double tail = 0.0;
  int d = static_cast<int>(populations.size());
  while (d > 0) {
    tail += populations[d - 1];
    if (tail > kSupportThreshold) break;
    --d;
  }
  return d;
}

int effective_mode_count(const std::vector<DensityMatrix>& trajectory) {
  if (trajectory.empty()) throw PreconditionError("effective_mode_count: empty trajectory");
  int d = 2;
  for (const DensityMatrix& rho : trajectory) {
    d = std::max(d, tail_mode_count(rho.populations()));
  }
  return d;
}

MeasureResult measure_subsystem(const StateVector& psi, Subsystem subsystem,
                                std::optional<int> d) {
  const DensityMatrix rho = reduce(psi, subsystem);
  MeasureResult out;
  out.effective_d = d.value_or(std::max(2, tail_mode_count(rho.populations())));
  out.purity = rho.purity();
  out.negativity = negativity(psi, subsystem);
  out.linear_entropy = linear_entropy(rho, out.effective_d);
  return out;
}

}  // namespace ionsim
