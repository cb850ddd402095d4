#pragma once

#include <optional>

#include "ionsim/fock.hpp"
#include "ionsim/hermitian.hpp"
#include "ionsim/params.hpp"

namespace ionsim {

// Exact unitary evolution by one-time Hermitian eigendecomposition: the
// Hamiltonian is time independent, so a T sweep costs O(d^2) per point after
// the O(d^3) setup.  Immutable after construction; evolve is pure, so many T
// values may be evaluated concurrently over a shared instance.
class Propagator {
 public:
  Propagator(HermitianOperator hamiltonian, const ModelParams& params, const SpaceDims& dims);

  // Scaled time T = a*t in degrees; internally t = (T pi/180) / a.
  StateVector evolve(const StateVector& psi0, double scaled_time_deg) const;

  const HermitianOperator& hamiltonian() const { return h_; }
  const ModelParams& params() const { return params_; }
  const SpaceDims& dims() const { return dims_; }

 private:
  HermitianOperator h_;
  ModelParams params_;
  SpaceDims dims_;
};

// Closed-form amplitudes of block B(1,1) over {|g00>, |e00>, |g11>, |e11>}:
//   (-1)^p (cos t cos aT, sin t cos aT, -i sin t sin aT, -i cos t sin aT)
// exact at the instants mu*t = p*pi.  When p_check is given, T must satisfy
// |mu*t - p*pi| <= 1e-9; without it the same trigonometric form is evaluated
// at arbitrary T with p = round(mu t / pi), which is an extrapolation between
// the exact instants.
Eigen::Vector4cd analytic_block11(const ModelParams& params, double theta_deg, double T_deg,
                                  std::optional<int> p_check = std::nullopt);

// |<GHZ_q|psi>|^2; the target's global sign drops out.
double ghz_fidelity(const StateVector& psi, int q);

}  // namespace ionsim
