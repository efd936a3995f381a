// troplb/trop_line_bundles.hpp - strata weights of toric line bundles on a
// tropical cycle and the inverse problem of recovering the divisor.
//
// For a weight c with cones of dimension k (dim Y = k), the strata are the
// cones of dimension k - 1 of Supp(c).

#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "troplb/arith.hpp"
#include "troplb/fan.hpp"
#include "troplb/fan_ops.hpp"
#include "troplb/minkowski_weights.hpp"
#include "troplb/toric_divisors.hpp"

namespace troplb {

struct StrataWeights {
  MinkowskiWeight c;
  std::map<std::size_t, Int> w;  // cone id in c.fan() -> w(tau), zeros included

  bool operator==(const StrataWeights& o) const { return c == o.c && w == o.w; }
};

/// Cones of dimension cone_dim - 1 lying in Supp(c).
std::vector<std::size_t> strata(const MinkowskiWeight& c);

/// Ray sets generating tau with k - 1 rays. Throws DimensionMismatch, NonSimplicial.
std::vector<RaySet> admissible_sets(const Fan& fan, std::size_t tau, std::size_t k);

/// w(tau) = kappa(c, phi_D)(tau). Throws NonSimplicial, NotCartier.
StrataWeights weights_from_divisor(const MinkowskiWeight& c, const ToricDivisor& d);

struct DivisorSolution {
  ToricDivisor representative;         // zero off the rays of Supp(c)
  IntMatrix homogeneous_basis;         // Hermite basis, vectors indexed by all rays
  std::vector<std::size_t> support_rays;
  std::size_t kernel_rank = 0;
  std::size_t principal_rank = 0;
  std::size_t quotient_rank = 0;       // #support rays - principal_rank
  bool underdetermined = false;        // kernel strictly larger than the principal divisors
};

/// Solves kappa(c, phi_D) = w for the coefficients on Supp(c). Throws Infeasible.
DivisorSolution divisor_from_weights(const StrataWeights& w);

/// True iff d restricted to Supp(c) differs from the representative by a
/// vector of the homogeneous solution lattice.
bool solution_contains(const DivisorSolution& s, const ToricDivisor& d);

struct BlowupRow {
  std::size_t wall = 0;   // cone id in the subdivided fan
  std::size_t home = 0;   // minimal old cone containing it
  bool exceptional = false;
  Int expected = 0;
  Int actual = 0;
};

struct BlowupReport {
  Subdivision subdivision;
  MinkowskiWeight c_fine;
  ToricDivisor pulled_back;
  StrataWeights before;
  StrataWeights after;
  std::vector<BlowupRow> rows;
  bool old_walls_preserved = true;
  bool exceptional_zero = true;
  bool ok() const { return old_walls_preserved && exceptional_zero; }
};

/// Star-subdivides at gamma, pulls D back and compares strata weights.
BlowupReport blowup_compatibility(const MinkowskiWeight& c, const ToricDivisor& d, std::size_t gamma);

}  // namespace troplb
