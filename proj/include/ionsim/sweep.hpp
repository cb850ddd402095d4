#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ionsim/hamiltonian.hpp"
#include "ionsim/initial.hpp"
#include "ionsim/measures.hpp"
#include "ionsim/params.hpp"

namespace ionsim {

// Inclusive linear grid; count == 1 collapses to {start}.
struct GridSpec {
  double start = 0.0;
  double stop = 180.0;
  int count = 1;

  double at(int k) const;
  void validate(const std::string& name) const;
  bool operator==(const GridSpec&) const = default;
};

struct DModeSpec {
  enum class Kind { automatic, fixed };
  Kind kind = Kind::automatic;
  int fixed_d = 2;

  static DModeSpec parse(const std::string& text);  // "auto" | "fixed:<D>"
  std::string str() const;
  bool operator==(const DModeSpec&) const = default;
};

struct SweepConfig {
  Tier tier = Tier::block;
  Family family = Family::i;
  Complex beta{1.0, 0.0};
  double mu_over_a = 4.0;
  double g_eta_c = 2.0;
  double eta_l = 0.1;
  double eta_c = 0.1;
  GridSpec theta_grid{0.0, 180.0, 37};
  GridSpec t_grid{0.0, 180.0, 181};
  int cutoff_m = 12;
  int cutoff_n = 12;
  DModeSpec d_mode{};
  double trunc_tol = 1e-9;

  ModelParams params() const;
  SpaceDims dims() const;
  void validate() const;
};

// One (theta, T) grid point.  Leakage is the population outside the union of
// the assigned blocks' supports; it is identically zero for the block tier.
struct SweepRecord {
  double theta_deg = 0.0;
  double T_deg = 0.0;
  double N_A = 0.0, N_B = 0.0, N_C = 0.0;
  double Sl_A = 0.0, Sl_B = 0.0, Sl_C = 0.0;
  double purity_A = 1.0, purity_B = 1.0, purity_C = 1.0;
  double norm_error = 0.0;
  double leakage = 0.0;
};

struct SweepMetadata {
  std::array<int, 3> effective_d{2, 2, 2};  // A, B, C
  bool renormalized_initial = false;        // family iii is explicitly renormalized
  double truncation_deficit = 0.0;          // family iii coherent tail at this cutoff
  double max_leakage = 0.0;
};

struct SweepResult {
  SweepConfig config;
  SweepMetadata metadata;
  std::vector<SweepRecord> records;  // row-major, theta outer, T inner
};

// Deterministic: identical config -> bit-identical records.  The optional
// per-subsystem d override is used by convergence_study to hold the linear
// entropy normalization fixed across truncation rungs.
SweepResult run_sweep(const SweepConfig& config,
                      std::optional<std::array<int, 3>> fixed_d = std::nullopt);

struct ConvergenceRung {
  int cutoff_lo = 0;
  int cutoff_hi = 0;
  double max_abs_diff = 0.0;
  std::map<std::string, double> per_field;
};

// Reruns the sweep along a strictly increasing cutoff ladder (applied to both
// cutoffs) and reports per consecutive pair the max-abs difference over grid
// points and record fields.  The effective d of the final rung is applied to
// every rung.
std::vector<ConvergenceRung> convergence_study(const SweepConfig& config,
                                               const std::vector<int>& cutoff_ladder);

}  // namespace ionsim
