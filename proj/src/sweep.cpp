#include "ionsim/sweep.hpp"

#include <algorithm>
#include <cmath>

#include "ionsim/io.hpp"
#include "ionsim/propagator.hpp"

namespace ionsim {

double GridSpec::at(int k) const {
  if (count == 1) return start;
  return start + (stop - start) * static_cast<double>(k) / static_cast<double>(count - 1);
}

void GridSpec::validate(const std::string& name) const {
  if (count < 1) throw PreconditionError(name + " grid: count must be >= 1");
  if (stop < start) throw PreconditionError(name + " grid: stop must be >= start");
}

DModeSpec DModeSpec::parse(const std::string& text) {
  if (text == "auto") return DModeSpec{};
  if (text.rfind("fixed:", 0) == 0) {
    DModeSpec spec;
    spec.kind = Kind::fixed;
    try {
      spec.fixed_d = std::stoi(text.substr(6));
    } catch (const std::exception&) {
      throw PreconditionError("d-mode: cannot parse '" + text + "'");
    }
    if (spec.fixed_d < 1) throw PreconditionError("d-mode: fixed d must be >= 1");
    return spec;
  }
  throw PreconditionError("d-mode: expected 'auto' or 'fixed:<D>', got '" + text + "'");
}

std::string DModeSpec::str() const {
  if (kind == Kind::automatic) return "auto";
  return "fixed:" + std::to_string(fixed_d);
}

ModelParams SweepConfig::params() const {
  return ModelParams::from_mu_ratio(mu_over_a, g_eta_c, eta_l, eta_c);
}

SpaceDims SweepConfig::dims() const { return SpaceDims(cutoff_m, cutoff_n); }

void SweepConfig::validate() const {
  theta_grid.validate("theta");
  t_grid.validate("T");
  if (mu_over_a < 1.0) throw PreconditionError("config: mu/a must be >= 1");
  if (cutoff_m < 1 || cutoff_n < 1) throw PreconditionError("config: cutoffs must be >= 1");
  if (trunc_tol <= 0.0) throw PreconditionError("config: trunc-tol must be > 0");
  params();  // validates couplings
}

namespace {

constexpr std::array<Subsystem, 3> kSubsystems{Subsystem::A, Subsystem::B, Subsystem::C};

// Per-point scratch kept so the effective d can be resolved before the linear
// entropies are filled in.
struct PointScratch {
  std::array<double, 3> negativity{};
  std::array<double, 3> purity{};
  std::array<int, 3> support_rank{};
  std::array<int, 3> tail_d{};
};

// Support of the family at a generic angle (all components populated): the
// modes a family makes available to each subsystem, independent of the thetas
// actually swept.  Keeps one d per subsystem per family, as the figures use.
std::array<int, 3> generic_support_d(const SweepConfig& config, const SpaceDims& dims) {
  InitialSpec generic{config.family, 45.0, config.beta};
  const StateVector psi = make_initial(generic, dims, config.trunc_tol);
  const auto blocks = block_specs(assign_blocks(psi));
  std::array<int, 3> d{2, 2, 2};
  for (const BlockSpec& spec : blocks) {
    for (int flat : block_support(spec, dims)) {
      const BasisTriple t = basis_unindex(dims, flat);
      d[1] = std::max(d[1], t.m + 1);
      d[2] = std::max(d[2], t.n + 1);
    }
  }
  return d;
}

}  // namespace

SweepResult run_sweep(const SweepConfig& config, std::optional<std::array<int, 3>> fixed_d) {
  config.validate();
  const SpaceDims dims = config.dims();
  const ModelParams params = config.params();

  SweepResult result;
  result.config = config;
  result.metadata.renormalized_initial = (config.family == Family::iii);
  if (config.family == Family::iii) {
    result.metadata.truncation_deficit =
        coherent_amplitudes(config.beta, dims.phonon_cutoff, config.trunc_tol).deficit;
  }

  // ld/full Hamiltonians do not depend on theta; decompose once.
  std::optional<Propagator> shared_prop;
  if (config.tier != Tier::block) {
    shared_prop.emplace(build_tier(config.tier, dims, params, {}), params, dims);
  }

  const int n_theta = config.theta_grid.count;
  const int n_t = config.t_grid.count;
  std::vector<PointScratch> scratch;
  scratch.reserve(static_cast<std::size_t>(n_theta) * n_t);
  result.records.reserve(scratch.capacity());

  for (int j = 0; j < n_theta; ++j) {
    const double theta = config.theta_grid.at(j);
    const StateVector psi0 =
        make_initial(InitialSpec{config.family, theta, config.beta}, dims, config.trunc_tol);
    const auto blocks = block_specs(assign_blocks(psi0));

    std::optional<Propagator> block_prop;
    if (config.tier == Tier::block) {
      block_prop.emplace(build_block_embedded(dims, params, blocks), params, dims);
    }
    const Propagator& prop = block_prop ? *block_prop : *shared_prop;

    std::vector<char> in_support(dims.total(), 0);
    for (const BlockSpec& spec : blocks) {
      for (int flat : block_support(spec, dims)) in_support[flat] = 1;
    }

    for (int k = 0; k < n_t; ++k) {
      const double t_deg = config.t_grid.at(k);
      StateVector psi = prop.evolve(psi0, t_deg);

      SweepRecord rec;
      rec.theta_deg = theta;
      rec.T_deg = t_deg;
      rec.norm_error = std::abs(psi.norm() - 1.0);
      if (config.tier == Tier::block) {
        rec.leakage = 0.0;  // blocks are invariant by construction
      } else {
        double inside = 0.0;
        for (int flat = 0; flat < dims.total(); ++flat) {
          if (in_support[flat]) inside += std::norm(psi.amplitudes()[flat]);
        }
        rec.leakage = std::max(0.0, 1.0 - inside);
        result.metadata.max_leakage = std::max(result.metadata.max_leakage, rec.leakage);
      }

      PointScratch pt;
      for (std::size_t s = 0; s < kSubsystems.size(); ++s) {
        const DensityMatrix rho = reduce(psi, kSubsystems[s]);
        pt.negativity[s] = negativity_from_schmidt(rho.eigenvalues());
        pt.purity[s] = rho.purity();
        pt.support_rank[s] = rho.support_rank();
        pt.tail_d[s] = tail_mode_count(rho.populations());
      }
      rec.N_A = pt.negativity[0];
      rec.N_B = pt.negativity[1];
      rec.N_C = pt.negativity[2];
      rec.purity_A = pt.purity[0];
      rec.purity_B = pt.purity[1];
      rec.purity_C = pt.purity[2];
      scratch.push_back(pt);
      result.records.push_back(rec);
    }
  }

  // Resolve one effective d per subsystem, then fill the linear entropies.
  std::array<int, 3> d{2, 2, 2};
  if (fixed_d) {
    d = *fixed_d;
  } else if (config.d_mode.kind == DModeSpec::Kind::fixed) {
    d = {config.d_mode.fixed_d, config.d_mode.fixed_d, config.d_mode.fixed_d};
  } else {
    d = generic_support_d(config, dims);
    for (const PointScratch& pt : scratch) {
      for (std::size_t s = 0; s < 3; ++s) d[s] = std::max(d[s], pt.tail_d[s]);
    }
  }
  result.metadata.effective_d = d;

  for (std::size_t p = 0; p < scratch.size(); ++p) {
    const PointScratch& pt = scratch[p];
    SweepRecord& rec = result.records[p];
    rec.Sl_A = linear_entropy_from(pt.purity[0], pt.support_rank[0], d[0]);
    rec.Sl_B = linear_entropy_from(pt.purity[1], pt.support_rank[1], d[1]);
    rec.Sl_C = linear_entropy_from(pt.purity[2], pt.support_rank[2], d[2]);
  }
  return result;
}

std::vector<ConvergenceRung> convergence_study(const SweepConfig& config,
                                               const std::vector<int>& cutoff_ladder) {
  if (cutoff_ladder.size() < 2) {
    throw PreconditionError("convergence_study: ladder needs at least two cutoffs");
  }
  if (!std::is_sorted(cutoff_ladder.begin(), cutoff_ladder.end()) ||
      std::adjacent_find(cutoff_ladder.begin(), cutoff_ladder.end()) != cutoff_ladder.end()) {
    throw PreconditionError("convergence_study: ladder must be strictly increasing");
  }

  SweepConfig final_config = config;
  final_config.cutoff_m = final_config.cutoff_n = cutoff_ladder.back();
  SweepResult final_run = run_sweep(final_config);
  const std::array<int, 3> d = final_run.metadata.effective_d;

  std::vector<SweepResult> runs;
  runs.reserve(cutoff_ladder.size());
  for (std::size_t r = 0; r + 1 < cutoff_ladder.size(); ++r) {
    SweepConfig rung = config;
    rung.cutoff_m = rung.cutoff_n = cutoff_ladder[r];
    runs.push_back(run_sweep(rung, d));
  }
  runs.push_back(std::move(final_run));

  std::vector<ConvergenceRung> report;
  for (std::size_t r = 0; r + 1 < runs.size(); ++r) {
    ConvergenceRung rung;
    rung.cutoff_lo = cutoff_ladder[r];
    rung.cutoff_hi = cutoff_ladder[r + 1];
    for (const RecordField& field : record_fields()) {
      double worst = 0.0;
      for (std::size_t p = 0; p < runs[r].records.size(); ++p) {
        worst = std::max(worst, std::abs(runs[r].records[p].*field.member -
                                         runs[r + 1].records[p].*field.member));
      }
      rung.per_field[field.name] = worst;
      rung.max_abs_diff = std::max(rung.max_abs_diff, worst);
    }
    report.push_back(std::move(rung));
  }
  return report;
}

}  // namespace ionsim
