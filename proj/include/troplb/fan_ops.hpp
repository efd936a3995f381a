// troplb/fan_ops.hpp - subdivisions, refinement tests, unimodularity and
// the cone over a rational polyhedral complex.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "troplb/arith.hpp"
#include "troplb/fan.hpp"

namespace troplb {

struct Subdivision {
  Fan fan;
  std::size_t new_ray = 0;  // index of the inserted ray in `fan`
  bool unchanged = false;   // the ray was already present
};

/// Star subdivision at u_E = primitive(sum of the rays of gamma).
Subdivision star_subdivide(const Fan& fan, std::size_t gamma);

/// Stellar subdivision at an arbitrary primitive vector of the support.
/// Throws ConeNotInFan if `v` is outside the support.
Subdivision stellar_subdivide(const Fan& fan, const IntVec& v);

/// Supports agree and every cone of `fine` lies in a cone of `coarse`.
bool refines(const Fan& fine, const Fan& coarse);

struct UnimodularityReport {
  bool unimodular = true;
  std::vector<std::size_t> offenders;            // maximal cone ids
  std::vector<std::vector<Int>> elementary_divisors;  // per offender; empty if non-simplicial
};

UnimodularityReport is_unimodular(const Fan& fan);

/// Lattice index of the sublattice generated by a simplicial cone's rays in
/// the saturated lattice of its span; 0 for non-simplicial cones.
Int multiplicity(const Fan& fan, std::size_t cone);

/// Star subdivisions at non-simplicial cones of smallest dimension until the fan is simplicial.
Fan simplicialize(const Fan& fan);

/// Simplicialize, then repeatedly subdivide the cone of largest multiplicity
/// (lexicographic tie-break) at a lattice point of its fundamental
/// parallelepiped until every cone is unimodular. Heuristic; not minimal.
Fan unimodularize(const Fan& fan);

struct ComplexCell {
  std::vector<RatVec> vertices;
  std::vector<IntVec> rays;
};

/// Polyhedra in Q^n; faces may be listed or left implicit.
struct RationalComplex {
  std::size_t ambient_dim = 0;
  std::vector<ComplexCell> cells;
};

/// Fan in rank n+1 whose cones are generated by (v, 1) and (r, 0). Throws NotAFan.
Fan cone_over_complex(const RationalComplex& complex);

/// Smallest cone containing `point`, or nullopt outside the support.
std::optional<std::size_t> support_membership(const Fan& fan, const RatVec& point);

}  // namespace troplb
