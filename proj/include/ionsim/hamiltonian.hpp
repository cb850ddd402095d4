#pragma once

#include <array>
#include <string>
#include <vector>

#include "ionsim/fock.hpp"
#include "ionsim/hermitian.hpp"
#include "ionsim/params.hpp"

namespace ionsim {

// Model fidelity tier:
//   block - closed four-level blocks (analytically solvable approximation)
//   ld    - Lamb-Dicke limit, Omega(s+ + s-) + g eta_c (s+ b a + s- b^dag a^dag)
//   full  - carrier and sideband dressed with the O_k operators
enum class Tier { block, ld, full };

std::string tier_name(Tier tier);
Tier tier_from_name(const std::string& name);

HermitianOperator build_ld(const SpaceDims& dims, const ModelParams& params);
HermitianOperator build_full(const SpaceDims& dims, const ModelParams& params);

// Closed block spanned by {|g,M-1,N-1>, |e,M-1,N-1>, |g,M,N>, |e,M,N>} with
// tridiagonal couplings (Omega, g eta_c sqrt(M N), Omega).
struct BlockSpec {
  int M = 1;
  int N = 1;

  std::array<BasisTriple, 4> states() const;
  // true when the upper rung |i,M,N> fits inside the truncated space
  bool upper_in(const SpaceDims& dims) const {
    return M < dims.phonon_cutoff && N < dims.photon_cutoff;
  }

  auto operator<=>(const BlockSpec&) const = default;
};

// The 4x4 block Hamiltonian (zero diagonal, tridiagonal couplings).
Eigen::Matrix4cd build_block(const BlockSpec& spec, const ModelParams& params);

struct BlockAssignment {
  BlockSpec spec;
  // amplitudes over the ordered block states (g lower, e lower, g upper, e upper)
  Eigen::Vector4cd amplitudes;
};

// Decomposes an initial state into closed blocks.  Every populated component
// |i,m,n> is treated as a lower rung and assigned to block B(m+1,n+1); states
// that would require an upper-rung assignment are rejected rather than guessed.
// Blocks come back sorted by (M,N) and are pairwise disjoint.
std::vector<BlockAssignment> assign_blocks(const StateVector& initial);

std::vector<BlockSpec> block_specs(const std::vector<BlockAssignment>& assignments);

// Flat indices of the block states that fit inside dims (4, or 2 when the
// upper rung lies beyond the truncation edge).
std::vector<int> block_support(const BlockSpec& spec, const SpaceDims& dims);

// Block-model Hamiltonian on the full space: direct sum of the given blocks,
// zero elsewhere.  A block whose upper rung falls outside the truncated space
// is clipped to its carrier bond, exactly as the truncated ladder operators
// clip the ld chain at the same edge.
HermitianOperator build_block_embedded(const SpaceDims& dims, const ModelParams& params,
                                       const std::vector<BlockSpec>& blocks);

// Test-harness hook: zeroes the sideband coupling from each block's top state
// |e,M,N> up to |g,M+1,N+1>, turning a chain Hamiltonian into one that leaves
// the block supports invariant.
Eigen::MatrixXcd sever_above_blocks(Eigen::MatrixXcd h, const SpaceDims& dims,
                                    const std::vector<BlockSpec>& blocks);

// Hamiltonian for the chosen tier; `blocks` is consulted by the block tier only.
HermitianOperator build_tier(Tier tier, const SpaceDims& dims, const ModelParams& params,
                             const std::vector<BlockSpec>& blocks);

}  // namespace ionsim
