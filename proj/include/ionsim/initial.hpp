#pragma once

#include <string>

#include "ionsim/fock.hpp"

namespace ionsim {

// The three initial-state families:
//   i   (cos t |g> + sin t |e>) |0,0>
//   ii  (cos t |g,1> + sin t |e,0>) |0>
//   iii (cos t |g,beta> + sin t |e,-beta>) |0>, ion motion in a cat state
enum class Family { i, ii, iii };

std::string family_name(Family family);
Family family_from_name(const std::string& name);

struct InitialSpec {
  Family family = Family::i;
  double theta_deg = 0.0;  // [0, 180]
  Complex beta = 1.0;      // family iii only
};

// Family iii is explicitly renormalized: <beta|-beta> != 0, so the written
// superposition is not unit norm for generic theta.
StateVector make_initial(const InitialSpec& spec, const SpaceDims& dims,
                         double trunc_tol = 1e-9);

// ((-1)^{1+q} / sqrt(2)) (|g,0,0> - i |e,1,1>)
StateVector ghz_target(int q, const SpaceDims& dims);

}  // namespace ionsim
