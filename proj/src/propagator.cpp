#include "ionsim/propagator.hpp"

#include <cmath>
#include <numbers>

#include "ionsim/initial.hpp"

namespace ionsim {

Propagator::Propagator(HermitianOperator hamiltonian, const ModelParams& params,
                       const SpaceDims& dims)
    : h_(std::move(hamiltonian)), params_(params), dims_(dims) {
  if (h_.dim() != dims_.total()) {
    throw PreconditionError("Propagator: Hamiltonian dimension does not match dims");
  }
  h_.compute_eigensystem();
}

StateVector Propagator::evolve(const StateVector& psi0, double scaled_time_deg) const {
  if (!(psi0.dims() == dims_)) throw PreconditionError("evolve: psi0 dims mismatch");
  if (std::abs(psi0.norm() - 1.0) > 1e-12) {
    throw PreconditionError("evolve: psi0 is not normalized");
  }
  const double t = (scaled_time_deg * std::numbers::pi / 180.0) / params_.a();
  const Eigen::VectorXcd phases =
      (Complex(0.0, -1.0) * t * h_.eigenvalues().cast<Complex>()).array().exp();
  Eigen::VectorXcd amps =
      h_.eigenvectors() * (phases.cwiseProduct(h_.eigenvectors().adjoint() * psi0.amplitudes()));
  return StateVector::unit(dims_, std::move(amps));
}

Eigen::Vector4cd analytic_block11(const ModelParams& params, double theta_deg, double T_deg,
                                  std::optional<int> p_check) {
  const double aT = T_deg * std::numbers::pi / 180.0;  // = a*t in radians
  const double mut = params.mu_over_a() * aT;
  long p = 0;
  if (p_check.has_value()) {
    p = *p_check;
    if (std::abs(mut - static_cast<double>(p) * std::numbers::pi) > 1e-9) {
      throw PreconditionError("analytic_block11: T violates mu*t = p*pi for p = " +
                              std::to_string(p));
    }
  } else {
    p = std::llround(mut / std::numbers::pi);
  }
  const double sign = (p % 2 == 0) ? 1.0 : -1.0;
  const double theta = theta_deg * std::numbers::pi / 180.0;
  const Complex mi(0.0, -1.0);
  Eigen::Vector4cd out;
  out << sign * std::cos(theta) * std::cos(aT), sign * std::sin(theta) * std::cos(aT),
      sign * mi * std::sin(theta) * std::sin(aT), sign * mi * std::cos(theta) * std::sin(aT);
  return out;
}

double ghz_fidelity(const StateVector& psi, int q) {
  const StateVector target = ghz_target(q, psi.dims());
  const Complex overlap = target.amplitudes().dot(psi.amplitudes());
  return std::norm(overlap);
}

}  // namespace ionsim
