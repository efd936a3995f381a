// troplb/trop_hypersurface.hpp - tropical hypersurfaces under the trivial valuation.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "troplb/arith.hpp"
#include "troplb/fan.hpp"
#include "troplb/minkowski_weights.hpp"
#include "troplb/polyhedral.hpp"

namespace troplb {

struct LaurentSupport {
  std::size_t ambient_dim = 0;
  std::vector<IntVec> exponents;
  std::vector<std::string> coefficients;  // optional tags, ignored by tropicalize

  LaurentSupport() = default;
  /// Throws DimensionMismatch for an empty support, wrong lengths or repeated exponents.
  LaurentSupport(std::size_t n, std::vector<IntVec> exps, std::vector<std::string> coeffs = {});
};

LatticePolytope newton_polytope(const LaurentSupport& f);

struct TropicalizeOptions {
  bool unimodularize = false;
};

/// Codimension-one skeleton of the normal fan of the Newton polytope with
/// lattice-length weights, min convention. When the polytope is not full
/// dimensional the cones are cut by the coordinate hyperplanes u_i = 0 for the
/// lexicographically first coordinate set dual to the lineality space.
/// Throws DimensionZeroPolytope.
WeightedFan tropicalize(const LaurentSupport& f, const TropicalizeOptions& opts = {});

/// Carries a weight to a refinement of its fan: each cone of the same
/// dimension inherits the weight of the old cone containing it.
MinkowskiWeight refine_weight(const MinkowskiWeight& c, const Fan& fine);

/// Mutual membership of all ray generators and one relative-interior point
/// of every cone. False on rank mismatch.
bool check_tropical_support(const Fan& fan, const WeightedFan& w);

}  // namespace troplb
