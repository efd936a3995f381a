#include "troplb/b_divisors.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "troplb/error.hpp"
#include "troplb/fan_ops.hpp"
#include "troplb/lattice.hpp"
#include "troplb/matrix.hpp"

namespace troplb {

CartierBDivisor::CartierBDivisor(Fan base, PLFunction phi) : base_(std::move(base)), phi_(std::move(phi)) {
  if (!refines(phi_.fan(), base_))
    throw Error(ErrorCode::NotARefinement, "determining fan does not refine the base");
}

ModelTower::ModelTower(std::vector<Fan> levels, std::vector<QDivisor> divisors)
    : levels_(std::move(levels)), divisors_(std::move(divisors)) {
  if (levels_.empty() || levels_.size() != divisors_.size())
    throw Error(ErrorCode::DimensionMismatch, "tower needs one divisor per level");
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (divisors_[i].fan != levels_[i]) throw Error(ErrorCode::DimensionMismatch, "tower divisor on the wrong fan");
    if (i == 0) continue;
    if (!refines(levels_[i], levels_[i - 1])) throw Error(ErrorCode::NotARefinement, "tower level is not a refinement");
    for (std::size_t r = 0; r < levels_[i - 1].num_rays(); ++r) {
      auto j = levels_[i].ray_index(levels_[i - 1].ray(r));
      if (!j || divisors_[i].coeffs[*j] != divisors_[i - 1].coeffs[r])
        throw Error(ErrorCode::DimensionMismatch, "tower divisors are not push-forward compatible");
    }
  }
}

ModelTower ModelTower::of(const CartierBDivisor& b, std::vector<Fan> levels) {
  std::vector<QDivisor> ds;
  for (const auto& f : levels) ds.push_back(push_forward(b, f));
  return ModelTower(std::move(levels), std::move(ds));
}

MonomialIdeal::MonomialIdeal(std::size_t n, std::vector<IntVec> gens) : ambient_dim(n), generators(std::move(gens)) {
  if (generators.empty()) throw Error(ErrorCode::DimensionMismatch, "monomial ideal needs a generator");
  for (const auto& g : generators)
    if (g.size() != n) throw Error(ErrorCode::DimensionMismatch, "ideal generator has wrong length");
}

Fan refine_by_regions(const Fan& fan, const std::vector<RatMatrix>& regions) {
  const std::size_t n = fan.ambient_dim();
  std::map<IntVec, std::size_t> index;
  std::vector<IntVec> rays;
  std::vector<RaySet> cones;
  for (auto id : fan.maximal_cones()) {
    const ConeGeometry& g = fan.geometry(id);
    if (g.dim() == 0) continue;
    RatMatrix facets = to_rat(g.facets());
    RatMatrix eqs = to_rat(g.equations());
    for (const auto& region : regions) {
      RatMatrix all = facets;
      all.insert(all.end(), region.begin(), region.end());
      std::vector<IntVec> gens = cone_rays(n, all, eqs);
      if (gens.empty() || rank(gens) != g.dim()) continue;
      RaySet s;
      for (const auto& v : gens) {
        auto [it, fresh] = index.emplace(v, rays.size());
        if (fresh) rays.push_back(v);
        s.push_back(it->second);
      }
      std::sort(s.begin(), s.end());
      cones.push_back(s);
    }
  }
  return Fan(n, std::move(rays), std::move(cones), fan.declared_complete());
}

Fan common_refinement(const Fan& a, const Fan& b) {
  std::vector<RatMatrix> regions;
  for (auto id : b.maximal_cones()) {
    const ConeGeometry& g = b.geometry(id);
    RatMatrix rows = to_rat(g.facets());
    for (const auto& e : g.equations()) {
      rows.push_back(to_rat(e));
      rows.push_back(to_rat(negate(e)));
    }
    regions.push_back(rows);
  }
  return refine_by_regions(a, regions);
}

namespace {

Rat min_form(const std::vector<RatVec>& forms, const IntVec& u) {
  Rat best = dot(forms.front(), u);
  for (const auto& f : forms) {
    Rat v = dot(f, u);
    if (v < best) best = v;
  }
  return best;
}

bool refines_either(const Fan& a, const Fan& b) { return refines(a, b) || refines(b, a); }

// Wall-crossing value f_tau(v1 + v2) - f(v1) - f(v2) >= 0 for concave f.
std::optional<Rat> wall_value(const PLFunction& phi, std::size_t tau) {
  const Fan& fan = phi.fan();
  auto co = fan.cofaces(tau, fan.cone(tau).dim + 1);
  if (co.size() != 2) return std::nullopt;
  IntMatrix gens = fan.generators(co[0]);
  for (const auto& g : fan.generators(co[1])) gens.push_back(g);
  if (rank(gens) != fan.cone(tau).dim + 1) return std::nullopt;
  RatVec v1 = to_rat(lateral_generator(fan, tau, co[0]).lift);
  RatVec v2 = to_rat(lateral_generator(fan, tau, co[1]).lift);
  return dot(phi.linear_on(tau), add(v1, v2)) - dot(phi.linear_on(co[0]), v1) - dot(phi.linear_on(co[1]), v2);
}

bool concave_across(const CartierBDivisor& b, bool relative) {
  const PLFunction& phi = b.phi();
  const Fan& fan = phi.fan();
  if (fan.dim() == 0) return true;
  for (auto tau : fan.cones_of_dim(fan.dim() - 1)) {
    auto co = fan.cofaces(tau, fan.dim());
    if (co.size() != 2) continue;
    if (relative) {
      bool same = false;
      for (auto base_id : b.base().maximal_cones()) {
        const ConeGeometry& bg = b.base().geometry(base_id);
        bool inside = true;
        for (auto c : co)
          for (const auto& g : fan.generators(c))
            if (!bg.contains(g)) inside = false;
        if (inside) {
          same = true;
          break;
        }
      }
      if (!same) continue;
    }
    auto v = wall_value(phi, tau);
    if (v && *v < 0) return false;
  }
  return true;
}

}  // namespace

CartierBDivisor min_of_linear_forms(const Fan& base, const std::vector<RatVec>& forms) {
  const std::size_t n = base.ambient_dim();
  if (forms.empty()) throw Error(ErrorCode::DimensionMismatch, "min_of_linear_forms: no forms");
  std::vector<RatVec> verts = Polyhedron::convex_hull(n, forms).vertices();
  std::vector<RatMatrix> regions;
  for (const auto& v : verts) {
    RatMatrix rows;
    for (const auto& p : verts)
      if (p != v) rows.push_back(sub(p, v));
    regions.push_back(rows);
  }
  Fan det = base.num_rays() == 0 ? base : simplicialize(refine_by_regions(base, regions));
  RatVec values;
  for (const auto& u : det.rays()) values.push_back(min_form(verts, u));
  return CartierBDivisor(base, PLFunction(det, values));
}

bool determined_on(const CartierBDivisor& b, const Fan& model) {
  const Fan& det = b.determining_fan();
  if (!refines_either(det, model)) throw Error(ErrorCode::IncomparableModels, "determined_on: models are incomparable");
  const std::size_t n = model.ambient_dim();
  for (auto id : model.maximal_cones()) {
    const ConeGeometry& g = model.geometry(id);
    RatMatrix a;
    RatVec rhs;
    auto add_point = [&](const IntVec& p) {
      a.push_back(to_rat(p));
      rhs.push_back(b.value(to_rat(p)));
    };
    for (const auto& p : model.generators(id)) add_point(p);
    for (const auto& p : det.rays())
      if (g.contains(p)) add_point(p);
    if (!a.empty() && !solve_rational(a, rhs, n)) return false;
  }
  return true;
}

QDivisor push_forward(const CartierBDivisor& b, const Fan& model) {
  if (!refines(b.determining_fan(), model)) throw Error(ErrorCode::NotARefinement, "push_forward: not a refinement");
  RatVec c;
  for (const auto& u : model.rays()) c.push_back(-b.value(to_rat(u)));
  return QDivisor{model, c};
}

CartierBDivisor pull_back(const ToricDivisor& d, const Fan& model) {
  CartierData cd = cartier_data(d);
  if (!refines(model, d.fan)) throw Error(ErrorCode::NotARefinement, "pull_back: not a refinement");
  RatVec values;
  for (const auto& u : model.rays()) {
    auto c = d.fan.minimal_cone_containing(to_rat(u));
    values.push_back(Rat(dot(cd.on(d.fan, *c), u)));
  }
  return CartierBDivisor(d.fan, PLFunction(model, values));
}

CartierBDivisor z_of_ideal(const MonomialIdeal& a, const Fan& base) {
  if (a.ambient_dim != base.ambient_dim()) throw Error(ErrorCode::RankMismatch, "z_of_ideal: rank mismatch");
  std::vector<RatVec> forms;
  for (const auto& g : a.generators) forms.push_back(to_rat(g));
  return min_of_linear_forms(base, forms);
}

bool is_relatively_nef(const CartierBDivisor& b) { return concave_across(b, true); }

bool is_nef(const CartierBDivisor& b) { return concave_across(b, false); }

CartierBDivisor nef_envelope(const ToricDivisor& d) {
  LatticePolytope p = polytope(d);
  if (p.is_empty()) throw Error(ErrorCode::EmptyPolytope, "nef_envelope: P_D is empty");
  for (const auto& u : d.fan.rays()) {
    for (const auto& r : p.rays())
      if (dot(r, u) < 0) throw Error(ErrorCode::UnboundedOnSupport, "nef_envelope: unbounded on the support");
    for (const auto& l : p.lineality())
      if (dot(l, u) != 0) throw Error(ErrorCode::UnboundedOnSupport, "nef_envelope: unbounded on the support");
  }
  return min_of_linear_forms(d.fan, p.vertices());
}

Rat graded_envelope_value(const ToricDivisor& d, const Int& m, const RatVec& u) {
  LatticePolytope p = polytope(m * d);
  if (p.is_empty()) throw Error(ErrorCode::EmptyPolytope, "graded_envelope_value: empty polytope");
  std::vector<IntVec> pts = p.lattice_points();
  if (pts.empty()) throw Error(ErrorCode::EmptyPolytope, "graded_envelope_value: no lattice points");
  Rat best = dot(u, pts.front());
  for (const auto& q : pts) {
    Rat v = dot(u, q);
    if (v < best) best = v;
  }
  return best / Rat(m);
}

namespace {

template <typename Cmp>
bool compare_on_refinement(const CartierBDivisor& a, const CartierBDivisor& b, Cmp cmp) {
  Fan r = common_refinement(a.determining_fan(), b.determining_fan());
  for (const auto& u : r.rays()) {
    auto x = a.phi().eval(to_rat(u));
    auto y = b.phi().eval(to_rat(u));
    if (!x || !y || !cmp(*x, *y)) return false;
  }
  return true;
}

}  // namespace

bool same_function(const CartierBDivisor& a, const CartierBDivisor& b) {
  return compare_on_refinement(a, b, [](const Rat& x, const Rat& y) { return x == y; }) &&
         compare_on_refinement(b, a, [](const Rat& x, const Rat& y) { return x == y; });
}

bool leq_function(const CartierBDivisor& a, const CartierBDivisor& b) {
  return compare_on_refinement(a, b, [](const Rat& x, const Rat& y) { return x <= y; });
}

CartierBDivisor restrict_to_subfan(const CartierBDivisor& b, const Fan& sub) {
  const Fan& det = b.determining_fan();
  std::map<std::size_t, std::size_t> remap;
  std::vector<IntVec> rays;
  RatVec values;
  std::vector<RaySet> cones;
  for (std::size_t id = 1; id < det.num_cones(); ++id) {
    auto home = sub.minimal_cone_containing(to_rat(det.geometry(id).interior_point()));
    if (!home) continue;
    bool inside = true;
    for (const auto& g : det.generators(id))
      if (!sub.geometry(*home).contains(g)) inside = false;
    if (!inside) continue;
    RaySet s;
    for (auto r : det.cone(id).rays) {
      auto [it, fresh] = remap.emplace(r, rays.size());
      if (fresh) {
        rays.push_back(det.ray(r));
        values.push_back(b.phi().values()[r]);
      }
      s.push_back(it->second);
    }
    std::sort(s.begin(), s.end());
    cones.push_back(s);
  }
  Fan f = Fan::trusted(sub.ambient_dim(), rays, cones);
  RatVec sorted(f.num_rays());
  for (std::size_t i = 0; i < rays.size(); ++i) sorted[*f.ray_index(rays[i])] = values[i];
  return CartierBDivisor(sub, PLFunction(f, sorted));
}

std::optional<CartierBDivisor> extend_to(const CartierBDivisor& b, const Fan& ambient) {
  // Every cone of the base must be a cone of `ambient`; throws ConeNotInFan otherwise.
  for (std::size_t id = 1; id < b.base().num_cones(); ++id) ambient.cone_id_of_generators(b.base().generators(id));
  const Fan& det = b.determining_fan();
  std::vector<std::pair<std::size_t, IntVec>> fresh;
  for (const auto& u : det.rays())
    if (!ambient.ray_index(u)) fresh.emplace_back(ambient.cone(*ambient.minimal_cone_containing(to_rat(u))).dim, u);
  std::sort(fresh.begin(), fresh.end(), [](const auto& x, const auto& y) {
    return x.first != y.first ? x.first > y.first : x.second < y.second;
  });
  Fan cur = ambient;
  for (const auto& [d, u] : fresh) cur = stellar_subdivide(cur, u).fan;
  for (std::size_t id = 1; id < det.num_cones(); ++id) {
    RaySet s;
    for (const auto& g : det.generators(id)) s.push_back(*cur.ray_index(g));
    std::sort(s.begin(), s.end());
    if (!cur.find_cone(s)) return std::nullopt;
  }
  RatVec values(cur.num_rays());
  for (std::size_t r = 0; r < cur.num_rays(); ++r)
    if (auto j = det.ray_index(cur.ray(r))) values[r] = b.phi().values()[*j];
  return CartierBDivisor(ambient, PLFunction(cur, values));
}

}  // namespace troplb
