#include "ionsim/initial.hpp"

#include <cmath>
#include <numbers>

namespace ionsim {

std::string family_name(Family family) {
  switch (family) {
    case Family::i: return "i";
    case Family::ii: return "ii";
    case Family::iii: return "iii";
  }
  throw std::logic_error("family_name: bad family");
}

Family family_from_name(const std::string& name) {
  if (name == "i") return Family::i;
  if (name == "ii") return Family::ii;
  if (name == "iii") return Family::iii;
  throw PreconditionError("unknown family '" + name + "' (expected i, ii, or iii)");
}

StateVector make_initial(const InitialSpec& spec, const SpaceDims& dims, double trunc_tol) {
  if (spec.theta_deg < 0.0 || spec.theta_deg > 180.0) {
    throw PreconditionError("make_initial: theta = " + std::to_string(spec.theta_deg) +
                            " deg outside [0, 180]");
  }
  const double theta = spec.theta_deg * std::numbers::pi / 180.0;
  const double ct = std::cos(theta);
  const double st = std::sin(theta);

  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(dims.total());
  switch (spec.family) {
    case Family::i:
      amps[basis_index(dims, Qubit::g, 0, 0)] = ct;
      amps[basis_index(dims, Qubit::e, 0, 0)] = st;
      return StateVector::unit(dims, std::move(amps));
    case Family::ii:
      amps[basis_index(dims, Qubit::g, 1, 0)] = ct;
      amps[basis_index(dims, Qubit::e, 0, 0)] = st;
      return StateVector::unit(dims, std::move(amps));
    case Family::iii: {
      const CoherentAmplitudes plus =
          coherent_amplitudes(spec.beta, dims.phonon_cutoff, trunc_tol);
      const CoherentAmplitudes minus =
          coherent_amplitudes(-spec.beta, dims.phonon_cutoff, trunc_tol);
      for (int m = 0; m < dims.phonon_cutoff; ++m) {
        amps[basis_index(dims, Qubit::g, m, 0)] = ct * plus.amplitudes[m];
        amps[basis_index(dims, Qubit::e, m, 0)] = st * minus.amplitudes[m];
      }
      return StateVector::normalized(dims, std::move(amps));
    }
  }
  throw std::logic_error("make_initial: bad family");
}

StateVector ghz_target(int q, const SpaceDims& dims) {
  if (q != 0 && q != 1) throw PreconditionError("ghz_target: q must be 0 or 1");
  if (dims.phonon_cutoff < 2 || dims.photon_cutoff < 2) {
    throw PreconditionError("ghz_target: cutoffs must be >= 2");
  }
  const double sign = (q == 0) ? -1.0 : 1.0;  // (-1)^{1+q}
  Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(dims.total());
  amps[basis_index(dims, Qubit::g, 0, 0)] = sign / std::numbers::sqrt2;
  amps[basis_index(dims, Qubit::e, 1, 1)] = sign * Complex(0.0, -1.0) / std::numbers::sqrt2;
  return StateVector::unit(dims, std::move(amps));
}

}  // namespace ionsim
