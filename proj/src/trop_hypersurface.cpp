#include "troplb/trop_hypersurface.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "troplb/error.hpp"
#include "troplb/fan_ops.hpp"
#include "troplb/matrix.hpp"

namespace troplb {

LaurentSupport::LaurentSupport(std::size_t n, std::vector<IntVec> exps, std::vector<std::string> coeffs)
    : ambient_dim(n), exponents(std::move(exps)), coefficients(std::move(coeffs)) {
  if (exponents.empty()) throw Error(ErrorCode::DimensionMismatch, "Laurent support is empty");
  std::set<IntVec> seen;
  for (const auto& e : exponents) {
    if (e.size() != n) throw Error(ErrorCode::DimensionMismatch, "exponent has wrong length");
    if (!seen.insert(e).second) throw Error(ErrorCode::DimensionMismatch, "repeated exponent");
  }
  if (!coefficients.empty() && coefficients.size() != exponents.size())
    throw Error(ErrorCode::DimensionMismatch, "coefficient tags must match exponents");
}

LatticePolytope newton_polytope(const LaurentSupport& f) {
  std::vector<RatVec> pts;
  for (const auto& e : f.exponents) pts.push_back(to_rat(e));
  return Polyhedron::convex_hull(f.ambient_dim, pts);
}

namespace {

// Sign sectors {s_i u_i >= 0 : i in S} for the coordinate set S dual to the lineality space.
std::vector<RatMatrix> lineality_sectors(std::size_t n, const IntMatrix& lineality) {
  const std::size_t l = lineality.size();
  if (l == 0) return {RatMatrix{}};
  std::vector<std::size_t> coords;
  for_each_combination(n, l, [&](const std::vector<std::size_t>& s) {
    IntMatrix m;
    for (const auto& b : lineality) {
      IntVec row;
      for (auto i : s) row.push_back(b[i]);
      m.push_back(row);
    }
    if (rank(m) != l) return true;
    coords = s;
    return false;
  });
  std::vector<RatMatrix> out;
  for (std::size_t mask = 0; mask < (std::size_t(1) << l); ++mask) {
    RatMatrix rows;
    for (std::size_t j = 0; j < l; ++j) {
      RatVec r = zero_rat(n);
      r[coords[j]] = (mask >> j) & 1 ? Rat(-1) : Rat(1);
      rows.push_back(r);
    }
    out.push_back(rows);
  }
  return out;
}

}  // namespace

WeightedFan tropicalize(const LaurentSupport& f, const TropicalizeOptions& opts) {
  const std::size_t n = f.ambient_dim;
  LatticePolytope p = newton_polytope(f);
  if (p.dim() < 1) throw Error(ErrorCode::DimensionZeroPolytope, "tropicalize: Newton polytope is a point");
  std::vector<IntVec> verts;
  for (const auto& v : p.vertices()) verts.push_back(to_int(v));

  IntMatrix diffs;
  for (const auto& v : verts) diffs.push_back(sub(v, verts.front()));
  IntMatrix lineality = integer_kernel(diffs, n);
  std::vector<RatMatrix> sectors = lineality_sectors(n, lineality);

  std::map<IntVec, std::size_t> ray_index;
  std::vector<IntVec> rays;
  std::vector<RaySet> cones;
  std::vector<Int> weights;
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      RatMatrix eq{to_rat(sub(verts[j], verts[i]))};
      RatMatrix ineq;
      for (const auto& a : verts)
        if (a != verts[i] && a != verts[j]) ineq.push_back(to_rat(sub(a, verts[i])));
      Int w = content(sub(verts[j], verts[i]));
      for (const auto& sector : sectors) {
        RatMatrix all = ineq;
        all.insert(all.end(), sector.begin(), sector.end());
        std::vector<IntVec> gens = cone_rays(n, all, eq);
        if (rank(gens) != n - 1) continue;
        RaySet s;
        for (const auto& g : gens) {
          auto [it, fresh] = ray_index.emplace(g, rays.size());
          if (fresh) rays.push_back(g);
          s.push_back(it->second);
        }
        std::sort(s.begin(), s.end());
        cones.push_back(s);
        weights.push_back(w);
      }
    }

  Fan fan(n, rays, cones);
  std::map<std::size_t, Int> wmap;
  for (std::size_t k = 0; k < cones.size(); ++k) {
    std::vector<IntVec> gens;
    for (auto r : cones[k]) gens.push_back(rays[r]);
    wmap.emplace(fan.cone_id_of_generators(gens), weights[k]);
  }
  MinkowskiWeight out(fan, 1, wmap);
  if (opts.unimodularize) out = refine_weight(out, unimodularize(fan));
  return out;
}

MinkowskiWeight refine_weight(const MinkowskiWeight& c, const Fan& fine) {
  const Fan& coarse = c.fan();
  const std::size_t d = c.cone_dim();
  std::map<std::size_t, Int> w;
  for (auto id : fine.cones_of_dim(d)) {
    auto home = coarse.minimal_cone_containing(to_rat(fine.geometry(id).interior_point()));
    if (!home) throw Error(ErrorCode::NotARefinement, "refine_weight: cone outside the support");
    if (coarse.cone(*home).dim == d) w.emplace(id, c.at(*home));
  }
  return MinkowskiWeight(fine, c.codim(), w);
}

bool check_tropical_support(const Fan& fan, const WeightedFan& w) {
  if (fan.ambient_dim() != w.fan().ambient_dim()) return false;
  Fan supp = support(w);
  auto covered = [](const Fan& a, const Fan& b) {
    for (std::size_t id = 1; id < a.num_cones(); ++id)
      if (!b.minimal_cone_containing(to_rat(a.geometry(id).interior_point()))) return false;
    return true;
  };
  return covered(fan, supp) && covered(supp, fan);
}

}  // namespace troplb
