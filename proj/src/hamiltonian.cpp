#include "ionsim/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace ionsim {

std::string tier_name(Tier tier) {
  switch (tier) {
    case Tier::block: return "block";
    case Tier::ld: return "ld";
    case Tier::full: return "full";
  }
  throw std::logic_error("tier_name: bad tier");
}

Tier tier_from_name(const std::string& name) {
  if (name == "block") return Tier::block;
  if (name == "ld") return Tier::ld;
  if (name == "full") return Tier::full;
  throw PreconditionError("unknown tier '" + name + "' (expected block, ld, or full)");
}

HermitianOperator build_ld(const SpaceDims& dims, const ModelParams& params) {
  const LadderOps ops = ladder_matrices(dims);
  const Eigen::MatrixXcd side =
      ops.sigma_plus * ops.photon_annihilator * ops.phonon_annihilator;
  Eigen::MatrixXcd h = params.omega * (ops.sigma_plus + ops.sigma_minus) +
                       params.g_eta_c * (side + side.adjoint());
  return HermitianOperator(std::move(h));
}

HermitianOperator build_full(const SpaceDims& dims, const ModelParams& params) {
  const LadderOps ops = ladder_matrices(dims);
  const Eigen::MatrixXcd o0 = ok_matrix(dims, 0, params.eta_l);
  const Eigen::MatrixXcd o1 = ok_matrix(dims, 1, params.eta_c);
  const Eigen::MatrixXcd side =
      ops.sigma_plus * ops.photon_annihilator * o1 * ops.phonon_annihilator;
  Eigen::MatrixXcd h = params.omega * (ops.sigma_plus * o0 + ops.sigma_minus * o0) +
                       params.g_eta_c * (side + side.adjoint());
  return HermitianOperator(std::move(h));
}

std::array<BasisTriple, 4> BlockSpec::states() const {
  return {BasisTriple{Qubit::g, M - 1, N - 1}, BasisTriple{Qubit::e, M - 1, N - 1},
          BasisTriple{Qubit::g, M, N}, BasisTriple{Qubit::e, M, N}};
}

Eigen::Matrix4cd build_block(const BlockSpec& spec, const ModelParams& params) {
  if (spec.M < 1 || spec.N < 1) throw PreconditionError("build_block: M, N must be >= 1");
  const double mid = params.g_eta_c * std::sqrt(static_cast<double>(spec.M) *
                                                static_cast<double>(spec.N));
  Eigen::Matrix4cd h = Eigen::Matrix4cd::Zero();
  h(0, 1) = h(1, 0) = params.omega;
  h(1, 2) = h(2, 1) = mid;
  h(2, 3) = h(3, 2) = params.omega;
  return h;
}

std::vector<BlockAssignment> assign_blocks(const StateVector& initial) {
  const SpaceDims& dims = initial.dims();
  std::map<std::pair<int, int>, BlockAssignment> by_lower;  // (M,N) -> assignment
  for (int flat = 0; flat < dims.total(); ++flat) {
    const Complex amp = initial.amplitudes()[flat];
    if (amp == 0.0) continue;
    const BasisTriple t = basis_unindex(dims, flat);
    auto& entry = by_lower[{t.m + 1, t.n + 1}];
    entry.spec = BlockSpec{t.m + 1, t.n + 1};
    entry.amplitudes[t.i == Qubit::g ? 0 : 1] = amp;
  }

  // A populated (m,n) pair that is also the upper rung of another populated
  // block cannot be assigned without guessing.
  for (const auto& [key, assignment] : by_lower) {
    const auto upper = std::pair<int, int>{key.first + 1, key.second + 1};
    if (by_lower.count(upper)) {
      throw BlockAmbiguityError(
          "assign_blocks: component on (m=" + std::to_string(upper.first - 1) +
          ", n=" + std::to_string(upper.second - 1) + ") is the upper rung of block B(" +
          std::to_string(key.first) + "," + std::to_string(key.second) + ")");
    }
  }

  std::vector<BlockAssignment> out;
  out.reserve(by_lower.size());
  for (auto& [key, assignment] : by_lower) out.push_back(std::move(assignment));
  return out;
}

std::vector<BlockSpec> block_specs(const std::vector<BlockAssignment>& assignments) {
  std::vector<BlockSpec> specs;
  specs.reserve(assignments.size());
  for (const auto& a : assignments) specs.push_back(a.spec);
  return specs;
}

std::vector<int> block_support(const BlockSpec& spec, const SpaceDims& dims) {
  std::vector<int> support;
  const auto sts = spec.states();
  const int keep = spec.upper_in(dims) ? 4 : 2;
  support.reserve(keep);
  for (int k = 0; k < keep; ++k) {
    support.push_back(basis_index(dims, sts[k].i, sts[k].m, sts[k].n));
  }
  return support;
}

HermitianOperator build_block_embedded(const SpaceDims& dims, const ModelParams& params,
                                       const std::vector<BlockSpec>& blocks) {
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dims.total(), dims.total());
  for (const BlockSpec& spec : blocks) {
    if (spec.M > dims.phonon_cutoff || spec.N > dims.photon_cutoff) {
      throw PreconditionError("build_block_embedded: block lower rung outside dims");
    }
    const Eigen::Matrix4cd h4 = build_block(spec, params);
    const std::vector<int> ids = block_support(spec, dims);
    for (std::size_t r = 0; r < ids.size(); ++r) {
      for (std::size_t c = 0; c < ids.size(); ++c) {
        h(ids[r], ids[c]) = h4(static_cast<int>(r), static_cast<int>(c));
      }
    }
  }
  return HermitianOperator(std::move(h));
}

Eigen::MatrixXcd sever_above_blocks(Eigen::MatrixXcd h, const SpaceDims& dims,
                                    const std::vector<BlockSpec>& blocks) {
  for (const BlockSpec& spec : blocks) {
    if (!spec.upper_in(dims)) continue;
    if (spec.M + 1 >= dims.phonon_cutoff || spec.N + 1 >= dims.photon_cutoff) continue;
    const int top = basis_index(dims, Qubit::e, spec.M, spec.N);
    const int above = basis_index(dims, Qubit::g, spec.M + 1, spec.N + 1);
    h(top, above) = 0.0;
    h(above, top) = 0.0;
  }
  return h;
}

HermitianOperator build_tier(Tier tier, const SpaceDims& dims, const ModelParams& params,
                             const std::vector<BlockSpec>& blocks) {
  switch (tier) {
    case Tier::block: return build_block_embedded(dims, params, blocks);
    case Tier::ld: return build_ld(dims, params);
    case Tier::full: return build_full(dims, params);
  }
  throw std::logic_error("build_tier: bad tier");
}

}  // namespace ionsim
