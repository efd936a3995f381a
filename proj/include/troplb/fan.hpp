// troplb/fan.hpp - rational polyhedral fans stored by ray-index sets.

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "troplb/arith.hpp"
#include "troplb/polyhedral.hpp"

namespace troplb {

/// Sorted ray indices into the parent fan's ray list.
using RaySet = std::vector<std::size_t>;

struct Cone {
  RaySet rays;
  std::size_t dim = 0;
};

/// Immutable fan. Rays are primitive, pairwise distinct and sorted
/// lexicographically; cones are closed under faces and sorted by
/// (dimension, ray-index set). Copies share storage.
class Fan {
 public:
  /// The fan {0} in rank 0.
  Fan();

  /// Builds the face closure of `maximal_cones` and verifies the fan axioms.
  /// Ray order is canonicalized; cone indices refer to the given `rays`.
  Fan(std::size_t ambient_dim, std::vector<IntVec> rays, std::vector<RaySet> maximal_cones,
      bool declared_complete = false);

  /// Same as the constructor but skips the pairwise intersection check; used
  /// by operations whose output is a fan by construction.
  static Fan trusted(std::size_t ambient_dim, std::vector<IntVec> rays,
                     std::vector<RaySet> maximal_cones, bool declared_complete = false);

  /// Convenience: cones given by their generators instead of indices.
  static Fan from_cones(std::size_t ambient_dim, const std::vector<std::vector<IntVec>>& cones,
                        bool declared_complete = false);

  std::size_t ambient_dim() const;
  std::size_t num_rays() const;
  const std::vector<IntVec>& rays() const;
  const IntVec& ray(std::size_t i) const;
  std::optional<std::size_t> ray_index(const IntVec& v) const;
  /// Throws ConeNotInFan when `v` is not a ray.
  std::size_t require_ray(const IntVec& v) const;

  std::size_t num_cones() const;
  const std::vector<Cone>& cones() const;
  const Cone& cone(std::size_t id) const;
  const ConeGeometry& geometry(std::size_t id) const;
  std::vector<IntVec> generators(std::size_t id) const;
  std::optional<std::size_t> find_cone(const RaySet& rays) const;
  /// Throws ConeNotInFan.
  std::size_t cone_id(const RaySet& rays) const;
  std::size_t cone_id_of_generators(const std::vector<IntVec>& gens) const;
  std::size_t zero_cone() const { return 0; }

  std::vector<std::size_t> cones_of_dim(std::size_t d) const;
  const std::vector<std::size_t>& maximal_cones() const;
  /// Cones of dimension `d` containing cone `id`.
  std::vector<std::size_t> cofaces(std::size_t id, std::size_t d) const;
  bool contains_cone(std::size_t big, std::size_t small) const;

  /// Largest cone dimension.
  std::size_t dim() const;
  bool is_pure() const;
  bool is_simplicial() const;
  bool declared_complete() const;
  /// Support equals the whole space.
  bool is_complete() const;

  /// Smallest cone containing the point, if the point is in the support.
  std::optional<std::size_t> minimal_cone_containing(const RatVec& x) const;

  /// Re-verifies face closure and the face-intersection axiom; throws NotAFan.
  void check_axioms() const;

  bool operator==(const Fan& other) const;
  bool operator!=(const Fan& other) const { return !(*this == other); }

 private:
  struct Data;
  static std::shared_ptr<const Data> build(std::size_t ambient_dim, std::vector<IntVec> rays,
                                           std::vector<RaySet> maximal_cones, bool declared_complete,
                                           bool validate);
  explicit Fan(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

/// True iff `small` is a face of the cone generated by `big` within `fan`'s rays.
bool is_face_of(const Fan& fan, const RaySet& small, const RaySet& big);

}  // namespace troplb
