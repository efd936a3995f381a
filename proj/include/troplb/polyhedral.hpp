// troplb/polyhedral.hpp - exact convex-geometry kernels.
//
// ConeGeometry works from generators (V-description) and derives the
// H-description by facet search over subsets of generators; enumerate_vertices
// goes the other way. Both are brute force and intended for the small
// dimensions and generator counts that occur in toric examples.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "troplb/arith.hpp"

namespace troplb {

class ConeGeometry {
 public:
  ConeGeometry() = default;
  ConeGeometry(std::size_t ambient_dim, std::vector<IntVec> generators);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return dim_; }
  const std::vector<IntVec>& generators() const { return generators_; }

  /// Hermite basis of span^perp in Z^n.
  const IntMatrix& equations() const { return equations_; }
  /// Primitive inward facet normals lying in the rational span of the cone.
  const IntMatrix& facets() const { return facets_; }

  /// Contains no line.
  bool is_pointed() const { return pointed_; }

  bool contains(const RatVec& x) const;
  bool contains(const IntVec& x) const;
  bool in_relative_interior(const RatVec& x) const;

  /// Indices of generators that span extreme rays (one per direction).
  std::vector<std::size_t> extreme_generators() const;

  /// Faces as sorted subsets of generator indices, including {} and the whole set.
  /// Only meaningful when every generator is extreme.
  std::vector<std::vector<std::size_t>> faces() const;

  /// Sum of generators: a point of the relative interior.
  IntVec interior_point() const;

 private:
  std::size_t ambient_dim_ = 0;
  std::size_t dim_ = 0;
  bool pointed_ = true;
  std::vector<IntVec> generators_;
  IntMatrix equations_;
  IntMatrix facets_;
};

/// V-description of {x : A x >= b, E x = e}. Points are the minimal faces,
/// represented by their unique element orthogonal to the lineality space.
struct VDescription {
  std::vector<RatVec> points;
  std::vector<IntVec> rays;        // extreme rays of the pointed part, primitive
  std::vector<IntVec> lineality;   // basis of the lineality space, primitive
  bool empty() const { return points.empty(); }
};

VDescription enumerate_vertices(std::size_t n, const RatMatrix& a, const RatVec& b,
                                const RatMatrix& e = {}, const RatVec& e_rhs = {});

/// Extreme rays of the cone {x : A x >= 0, E x = 0}; requires the cone to be pointed.
std::vector<IntVec> cone_rays(std::size_t n, const RatMatrix& a, const RatMatrix& e = {});

/// Rational polyhedron {m : A m >= b} with derived vertices, rays and lineality.
/// Used both for Newton polytopes and for the divisor polyhedra P_D.
class Polyhedron {
 public:
  Polyhedron() = default;

  static Polyhedron from_inequalities(std::size_t n, RatMatrix a, RatVec b);
  static Polyhedron convex_hull(std::size_t n, const std::vector<RatVec>& points,
                                const std::vector<IntVec>& rays = {});

  std::size_t ambient_dim() const { return n_; }
  /// Affine dimension; -1 for the empty set.
  int dim() const;
  bool is_empty() const { return v_.points.empty(); }
  bool is_bounded() const { return v_.rays.empty() && v_.lineality.empty(); }

  const std::vector<RatVec>& vertices() const { return v_.points; }
  const std::vector<IntVec>& rays() const { return v_.rays; }
  const std::vector<IntVec>& lineality() const { return v_.lineality; }
  const RatMatrix& inequalities() const { return a_; }
  const RatVec& rhs() const { return b_; }

  bool contains(const RatVec& x) const;

  /// All lattice points; only for bounded polyhedra.
  std::vector<IntVec> lattice_points() const;

  /// min over the polyhedron of <x, u>; nullopt when unbounded below.
  std::optional<Rat> min_pairing(const RatVec& u) const;

  Polyhedron translate(const RatVec& shift) const;

  /// Same point set (compared through sorted vertices, rays and lineality span).
  bool same_set(const Polyhedron& other) const;

 private:
  std::size_t n_ = 0;
  RatMatrix a_;
  RatVec b_;
  VDescription v_;
};

using LatticePolytope = Polyhedron;

}  // namespace troplb
