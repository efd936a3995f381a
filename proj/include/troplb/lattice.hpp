// troplb/lattice.hpp - quotient lattices N/N_tau and lateral generators.

#pragma once

#include <cstddef>

#include "troplb/arith.hpp"
#include "troplb/fan.hpp"

namespace troplb {

/// N / N_tau for the saturated sublattice N_tau = span(tau) ∩ N.
/// `projection` has rank(N) - dim(tau) rows, kernel exactly N_tau and is
/// surjective onto Z^(n - dim tau).
struct QuotientLattice {
  std::size_t ambient_dim = 0;
  IntMatrix sublattice;  // Hermite basis of N_tau
  IntMatrix projection;  // Hermite basis of tau^perp ∩ M, used as a map N -> Z^k

  std::size_t rank() const { return projection.size(); }
  IntVec project(const IntVec& v) const;
  RatVec project(const RatVec& v) const;
};

QuotientLattice quotient_by_cone(const Fan& fan, std::size_t tau);

struct LateralGenerator {
  IntVec quotient;  // primitive generator v_{sigma/tau} of the image ray
  IntVec lift;      // integral point of sigma projecting to `quotient`
};

/// Requires tau a face of sigma with dim sigma = dim tau + 1; throws NotAFacetPair.
LateralGenerator lateral_generator(const Fan& fan, std::size_t tau, std::size_t sigma);

}  // namespace troplb
