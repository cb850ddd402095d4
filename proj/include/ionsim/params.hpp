#pragma once

#include <cmath>

#include "ionsim/errors.hpp"

namespace ionsim {

// Physical couplings in scaled units (hbar = 1).  The sideband strength enters
// the dynamics only through the product g*eta_c, which is what is stored; the
// bare ion-cavity coupling is g = g_eta_c / eta_c.  Derived scales:
//   a  = g*eta_c / 2      (unit of energy; scaled time T = a*t)
//   mu = sqrt(a^2 + Omega^2)
struct ModelParams {
  double omega;    // laser Rabi coupling
  double g_eta_c;  // ion-cavity coupling times cavity Lamb-Dicke parameter
  double eta_l;    // laser Lamb-Dicke parameter
  double eta_c;    // cavity Lamb-Dicke parameter

  ModelParams(double omega_in, double g_eta_c_in, double eta_l_in, double eta_c_in)
      : omega(omega_in), g_eta_c(g_eta_c_in), eta_l(eta_l_in), eta_c(eta_c_in) {
    if (!(g_eta_c > 0.0)) throw PreconditionError("ModelParams: g*eta_c must be > 0 (a > 0)");
    if (omega < 0.0) throw PreconditionError("ModelParams: Omega must be >= 0");
    if (eta_l < 0.0 || eta_c < 0.0) throw PreconditionError("ModelParams: eta must be >= 0");
  }

  double a() const { return 0.5 * g_eta_c; }
  double mu() const { return std::hypot(a(), omega); }
  double mu_over_a() const { return mu() / a(); }

  // Omega chosen so that mu/a equals the requested ratio.
  static ModelParams from_mu_ratio(double mu_over_a, double g_eta_c = 2.0, double eta_l = 0.1,
                                   double eta_c = 0.1) {
    if (mu_over_a < 1.0) throw PreconditionError("ModelParams: mu/a must be >= 1");
    const double a = 0.5 * g_eta_c;
    const double omega = a * std::sqrt(mu_over_a * mu_over_a - 1.0);
    return ModelParams(omega, g_eta_c, eta_l, eta_c);
  }
};

}  // namespace ionsim
