#include "troplb/fan_ops.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "troplb/error.hpp"
#include "troplb/matrix.hpp"

namespace troplb {

namespace {

RatVec fractional_part(const RatVec& x) {
  RatVec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    Int fl = floor_div(x[i].get_num(), x[i].get_den());
    out[i] = x[i] - Rat(fl);
  }
  return out;
}

// Nonzero lattice point of the half-open fundamental parallelepiped of a
// simplicial cone minimizing max coefficient, ties broken lexicographically.
IntVec parallelepiped_point(const Fan& fan, std::size_t id) {
  const std::size_t n = fan.ambient_dim();
  std::vector<IntVec> gens = fan.generators(id);
  IntMatrix span_basis = integer_kernel(fan.geometry(id).equations(), n);
  RatMatrix gt(n, RatVec(gens.size()));
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) gt[i][j] = Rat(gens[j][i]);

  std::vector<RatVec> basis_coords;
  for (const auto& b : span_basis) {
    auto lam = solve_rational(gt, to_rat(b), gens.size());
    basis_coords.push_back(fractional_part(*lam));
  }
  std::set<RatVec> group{zero_rat(gens.size())};
  std::deque<RatVec> queue{zero_rat(gens.size())};
  while (!queue.empty()) {
    RatVec cur = queue.front();
    queue.pop_front();
    for (const auto& b : basis_coords) {
      RatVec next = fractional_part(add(cur, b));
      if (group.insert(next).second) queue.push_back(next);
    }
  }

  std::optional<std::pair<Rat, IntVec>> best;
  for (const auto& lam : group) {
    if (is_zero(lam)) continue;
    Rat mx = *std::max_element(lam.begin(), lam.end());
    RatVec p = zero_rat(n);
    for (std::size_t j = 0; j < gens.size(); ++j) p = add(p, scale(lam[j], to_rat(gens[j])));
    IntVec pi = to_int(p);
    if (!best || mx < best->first || (mx == best->first && pi < best->second)) best.emplace(mx, pi);
  }
  return primitive(best->second);
}

}  // namespace

Subdivision stellar_subdivide(const Fan& fan, const IntVec& v) {
  auto tau = fan.minimal_cone_containing(to_rat(v));
  if (!tau) throw Error(ErrorCode::ConeNotInFan, "stellar_subdivide: vector outside the support");
  IntVec u = primitive(v);
  if (auto existing = fan.ray_index(u)) return Subdivision{fan, *existing, true};

  std::vector<IntVec> rays = fan.rays();
  const std::size_t new_index = rays.size();
  rays.push_back(u);
  std::vector<RaySet> cones;
  for (auto id : fan.maximal_cones()) {
    const Cone& s = fan.cone(id);
    if (!fan.contains_cone(id, *tau)) {
      cones.push_back(s.rays);
      continue;
    }
    for (const auto& f : fan.geometry(id).facets()) {
      if (dot(f, u) <= 0) continue;
      RaySet face;
      for (auto r : s.rays)
        if (dot(f, fan.ray(r)) == 0) face.push_back(r);
      face.push_back(new_index);
      cones.push_back(face);
    }
  }
  Fan out = Fan::trusted(fan.ambient_dim(), std::move(rays), std::move(cones), fan.declared_complete());
  return Subdivision{out, *out.ray_index(u), false};
}

Subdivision star_subdivide(const Fan& fan, std::size_t gamma) {
  if (gamma >= fan.num_cones()) throw Error(ErrorCode::ConeNotInFan, "star_subdivide: unknown cone");
  const Cone& g = fan.cone(gamma);
  if (g.dim == 0) throw Error(ErrorCode::DimensionMismatch, "star_subdivide: zero cone");
  if (g.dim == 1) return Subdivision{fan, g.rays.front(), true};
  return stellar_subdivide(fan, fan.geometry(gamma).interior_point());
}

bool refines(const Fan& fine, const Fan& coarse) {
  if (fine.ambient_dim() != coarse.ambient_dim()) return false;
  for (auto id : fine.maximal_cones()) {
    auto c = coarse.minimal_cone_containing(to_rat(fine.geometry(id).interior_point()));
    if (!c) return false;
    for (const auto& g : fine.generators(id))
      if (!coarse.geometry(*c).contains(g)) return false;
  }
  for (auto cid : coarse.maximal_cones()) {
    const ConeGeometry& cg = coarse.geometry(cid);
    const std::size_t d = cg.dim();
    if (d == 0) continue;
    std::vector<std::size_t> pieces;
    for (auto fid : fine.cones_of_dim(d)) {
      bool inside = true;
      for (const auto& g : fine.generators(fid))
        if (!cg.contains(g)) {
          inside = false;
          break;
        }
      if (inside) pieces.push_back(fid);
    }
    if (pieces.empty()) return false;
    std::map<std::size_t, int> ridge_count;
    for (auto p : pieces)
      for (auto r : fine.cones_of_dim(d - 1))
        if (fine.contains_cone(p, r)) ++ridge_count[r];
    for (const auto& [ridge, count] : ridge_count) {
      bool on_boundary = false;
      for (const auto& f : cg.facets()) {
        bool all_zero = true;
        for (const auto& g : fine.generators(ridge))
          if (dot(f, g) != 0) {
            all_zero = false;
            break;
          }
        if (all_zero) {
          on_boundary = true;
          break;
        }
      }
      if (on_boundary ? count != 1 : count != 2) return false;
    }
  }
  return true;
}

Int multiplicity(const Fan& fan, std::size_t cone) {
  const Cone& c = fan.cone(cone);
  if (c.rays.size() != c.dim) return 0;
  Int m = 1;
  for (const auto& e : smith_diagonal(fan.generators(cone), fan.ambient_dim())) m *= e;
  return m;
}

UnimodularityReport is_unimodular(const Fan& fan) {
  UnimodularityReport rep;
  for (auto id : fan.maximal_cones()) {
    const Cone& c = fan.cone(id);
    std::vector<Int> ed;
    bool ok = c.rays.size() == c.dim;
    if (ok) {
      ed = smith_diagonal(fan.generators(id), fan.ambient_dim());
      for (const auto& e : ed)
        if (e != 1) ok = false;
    }
    if (!ok) {
      rep.unimodular = false;
      rep.offenders.push_back(id);
      rep.elementary_divisors.push_back(ed);
    }
  }
  return rep;
}

Fan simplicialize(const Fan& fan) {
  Fan cur = fan;
  for (int guard = 0; guard < 100000; ++guard) {
    std::optional<std::size_t> target;
    for (std::size_t id = 0; id < cur.num_cones(); ++id) {
      const Cone& c = cur.cone(id);
      if (c.rays.size() != c.dim) {
        target = id;
        break;
      }
    }
    if (!target) return cur;
    cur = star_subdivide(cur, *target).fan;
  }
  throw Error(ErrorCode::NotAFan, "simplicialize: iteration limit reached");
}

Fan unimodularize(const Fan& fan) {
  Fan cur = simplicialize(fan);
  for (int guard = 0; guard < 100000; ++guard) {
    UnimodularityReport rep = is_unimodular(cur);
    if (rep.unimodular) return cur;
    std::size_t pick = rep.offenders.front();
    Int best = multiplicity(cur, pick);
    for (auto id : rep.offenders) {
      Int m = multiplicity(cur, id);
      if (m > best || (m == best && cur.generators(id) < cur.generators(pick))) {
        best = m;
        pick = id;
      }
    }
    cur = stellar_subdivide(cur, parallelepiped_point(cur, pick)).fan;
  }
  throw Error(ErrorCode::NotAFan, "unimodularize: iteration limit reached");
}

Fan cone_over_complex(const RationalComplex& complex) {
  const std::size_t n = complex.ambient_dim;
  std::map<IntVec, std::size_t> index;
  std::vector<IntVec> rays;
  auto ray_id = [&](const IntVec& v) {
    auto [it, fresh] = index.emplace(v, rays.size());
    if (fresh) rays.push_back(v);
    return it->second;
  };
  std::vector<RaySet> cones;
  for (const auto& cell : complex.cells) {
    if (cell.vertices.empty()) throw Error(ErrorCode::NotAFan, "cone_over_complex: empty cell");
    RaySet s;
    for (const auto& v : cell.vertices) {
      if (v.size() != n) throw Error(ErrorCode::RankMismatch, "cone_over_complex: vertex length");
      RatVec h = v;
      h.push_back(Rat(1));
      s.push_back(ray_id(primitive(h)));
    }
    for (const auto& r : cell.rays) {
      if (r.size() != n) throw Error(ErrorCode::RankMismatch, "cone_over_complex: ray length");
      IntVec h = r;
      h.push_back(Int(0));
      s.push_back(ray_id(primitive(h)));
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    cones.push_back(s);
  }
  return Fan(n + 1, std::move(rays), std::move(cones));
}

std::optional<std::size_t> support_membership(const Fan& fan, const RatVec& point) {
  if (point.size() != fan.ambient_dim()) throw Error(ErrorCode::RankMismatch, "support_membership: rank");
  return fan.minimal_cone_containing(point);
}

}  // namespace troplb
