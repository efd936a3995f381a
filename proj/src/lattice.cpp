#include "troplb/lattice.hpp"

#include "troplb/error.hpp"
#include "troplb/matrix.hpp"

namespace troplb {

IntVec QuotientLattice::project(const IntVec& v) const {
  IntVec out;
  out.reserve(projection.size());
  for (const auto& row : projection) out.push_back(dot(row, v));
  return out;
}

RatVec QuotientLattice::project(const RatVec& v) const {
  RatVec out;
  out.reserve(projection.size());
  for (const auto& row : projection) out.push_back(dot(v, row));
  return out;
}

QuotientLattice quotient_by_cone(const Fan& fan, std::size_t tau) {
  if (tau >= fan.num_cones()) throw Error(ErrorCode::ConeNotInFan, "quotient_by_cone: unknown cone");
  QuotientLattice q;
  q.ambient_dim = fan.ambient_dim();
  q.projection = fan.geometry(tau).equations();
  q.sublattice = integer_kernel(q.projection, q.ambient_dim);
  return q;
}

LateralGenerator lateral_generator(const Fan& fan, std::size_t tau, std::size_t sigma) {
  const Cone& t = fan.cone(tau);
  const Cone& s = fan.cone(sigma);
  if (s.dim != t.dim + 1 || !fan.contains_cone(sigma, tau))
    throw Error(ErrorCode::NotAFacetPair, "lateral_generator: tau is not a facet of sigma");
  const std::size_t n = fan.ambient_dim();
  QuotientLattice q = quotient_by_cone(fan, tau);

  LateralGenerator out;
  out.quotient = primitive(q.project(fan.geometry(sigma).interior_point()));
  auto w = solve_integer(q.projection, out.quotient, n);
  if (!w) throw Error(ErrorCode::NotAFacetPair, "lateral_generator: projection is not surjective");
  IntVec lift = reduce_mod_lattice(*w, q.sublattice);

  // Slide along a relative-interior point of tau until the lift enters sigma,
  // taking the smallest admissible shift.
  IntVec p = zero_int(n);
  for (auto r : t.rays) p = add(p, fan.ray(r));
  if (!is_zero(p)) {
    bool have = false;
    Int shift = 0;
    for (const auto& f : fan.geometry(sigma).facets()) {
      Int fp = dot(f, p);
      if (fp == 0) continue;
      Int need = ceil_div(-dot(f, lift), fp);
      if (!have || need > shift) shift = need;
      have = true;
    }
    lift = add(lift, scale(shift, p));
  }
  if (!fan.geometry(sigma).contains(lift))
    throw Error(ErrorCode::NotAFacetPair, "lateral_generator: no lift inside sigma");
  out.lift = std::move(lift);
  return out;
}

}  // namespace troplb
