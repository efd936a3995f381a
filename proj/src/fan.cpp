#include "troplb/fan.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "troplb/error.hpp"
#include "troplb/matrix.hpp"

namespace troplb {

struct Fan::Data {
  std::size_t n = 0;
  std::vector<IntVec> rays;
  std::map<IntVec, std::size_t> ray_lookup;
  std::vector<Cone> cones;
  std::vector<ConeGeometry> geoms;
  std::map<RaySet, std::size_t> lookup;
  std::vector<std::size_t> maximal;
  std::vector<RaySet> input_cones;
  bool declared_complete = false;
};

namespace {

std::vector<IntVec> gens_of(const std::vector<IntVec>& rays, const RaySet& s) {
  std::vector<IntVec> g;
  g.reserve(s.size());
  for (auto i : s) g.push_back(rays[i]);
  return g;
}

bool subset_of(const RaySet& a, const RaySet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

RaySet face_closure(const std::vector<IntVec>& rays, const ConeGeometry& big_geom, const RaySet& big,
                    const RaySet& small) {
  RaySet closure;
  for (auto r : big) {
    bool on_all = true;
    for (const auto& f : big_geom.facets()) {
      bool vanishes_on_small = true;
      for (auto s : small)
        if (dot(f, rays[s]) != 0) {
          vanishes_on_small = false;
          break;
        }
      if (vanishes_on_small && dot(f, rays[r]) != 0) {
        on_all = false;
        break;
      }
    }
    if (on_all) closure.push_back(r);
  }
  return closure;
}

// The intersection of two cones must be a common face of both.
void check_pair(std::size_t n, const std::vector<IntVec>& rays,
                const RaySet& a, const ConeGeometry& ga, const RaySet& b, const ConeGeometry& gb) {
  RaySet common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  if (face_closure(rays, ga, a, common) != common || face_closure(rays, gb, b, common) != common)
    throw Error(ErrorCode::NotAFan, "common rays of two cones do not form a common face");
  RatMatrix ineq = to_rat(ga.facets());
  for (const auto& f : gb.facets()) ineq.push_back(to_rat(f));
  RatMatrix eq = to_rat(ga.equations());
  for (const auto& e : gb.equations()) eq.push_back(to_rat(e));
  std::vector<IntVec> meet = cone_rays(n, ineq, eq);
  if (meet.empty()) return;
  ConeGeometry gc(n, gens_of(rays, common));
  for (const auto& r : meet)
    if (!gc.contains(r))
      throw Error(ErrorCode::NotAFan, "two cones intersect outside their common face");
}

}  // namespace

std::shared_ptr<const Fan::Data> Fan::build(std::size_t n, std::vector<IntVec> rays,
                                            std::vector<RaySet> maximal_cones, bool declared_complete,
                                            bool validate) {
  auto d = std::make_shared<Data>();
  d->n = n;
  d->declared_complete = declared_complete;

  std::vector<std::size_t> order(rays.size());
  for (std::size_t i = 0; i < rays.size(); ++i) {
    order[i] = i;
    if (rays[i].size() != n) throw Error(ErrorCode::NotAFan, "ray has wrong length");
    if (is_zero(rays[i])) throw Error(ErrorCode::NotAFan, "zero ray");
    if (content(rays[i]) != 1) throw Error(ErrorCode::NotAFan, "ray " + to_string(rays[i]) + " is not primitive");
  }
  std::sort(order.begin(), order.end(), [&](auto x, auto y) { return rays[x] < rays[y]; });
  std::vector<std::size_t> remap(rays.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    remap[order[k]] = k;
    d->rays.push_back(rays[order[k]]);
    if (!d->ray_lookup.emplace(d->rays.back(), k).second)
      throw Error(ErrorCode::NotAFan, "duplicate ray " + to_string(d->rays.back()));
  }

  std::set<RaySet> all{RaySet{}};
  std::vector<ConeGeometry> input_geoms;
  for (auto& mc : maximal_cones) {
    for (auto& i : mc) {
      if (i >= rays.size()) throw Error(ErrorCode::NotAFan, "cone references a missing ray");
      i = remap[i];
    }
    std::sort(mc.begin(), mc.end());
    mc.erase(std::unique(mc.begin(), mc.end()), mc.end());
  }
  std::sort(maximal_cones.begin(), maximal_cones.end());
  maximal_cones.erase(std::unique(maximal_cones.begin(), maximal_cones.end()), maximal_cones.end());

  for (const auto& mc : maximal_cones) {
    ConeGeometry g(n, gens_of(d->rays, mc));
    if (!g.is_pointed()) throw Error(ErrorCode::NotAFan, "cone is not strongly convex");
    if (g.extreme_generators().size() != mc.size())
      throw Error(ErrorCode::NotAFan, "cone generators are not all extreme rays");
    for (const auto& face : g.faces()) {
      RaySet s;
      for (auto i : face) s.push_back(mc[i]);
      all.insert(s);
    }
    input_geoms.push_back(std::move(g));
  }
  for (std::size_t i = 0; i < d->rays.size(); ++i) all.insert(RaySet{i});

  std::vector<std::pair<std::size_t, RaySet>> keyed;
  std::map<RaySet, ConeGeometry> geom_of;
  for (const auto& s : all) {
    ConeGeometry g(n, gens_of(d->rays, s));
    keyed.emplace_back(g.dim(), s);
    geom_of.emplace(s, std::move(g));
  }
  std::sort(keyed.begin(), keyed.end());
  for (auto& [dim, s] : keyed) {
    d->lookup.emplace(s, d->cones.size());
    d->cones.push_back(Cone{s, dim});
    d->geoms.push_back(geom_of.at(s));
  }
  for (std::size_t i = 0; i < d->cones.size(); ++i) {
    bool is_max = true;
    for (std::size_t j = 0; j < d->cones.size() && is_max; ++j)
      if (j != i && d->cones[j].rays.size() > d->cones[i].rays.size() &&
          subset_of(d->cones[i].rays, d->cones[j].rays))
        is_max = false;
    if (is_max) d->maximal.push_back(i);
  }

  d->input_cones = maximal_cones;
  for (std::size_t i = 0; i < d->rays.size(); ++i) d->input_cones.push_back(RaySet{i});
  if (validate) {
    for (std::size_t i = 0; i < maximal_cones.size(); ++i)
      for (std::size_t j = i + 1; j < maximal_cones.size(); ++j)
        check_pair(n, d->rays, maximal_cones[i], input_geoms[i], maximal_cones[j],
                   input_geoms[j]);
  }
  return d;
}

Fan::Fan() : d_(build(0, {}, {}, false, false)) {}

Fan::Fan(std::size_t ambient_dim, std::vector<IntVec> rays, std::vector<RaySet> maximal_cones,
         bool declared_complete)
    : d_(build(ambient_dim, std::move(rays), std::move(maximal_cones), declared_complete, true)) {}

Fan Fan::trusted(std::size_t ambient_dim, std::vector<IntVec> rays, std::vector<RaySet> maximal_cones,
                 bool declared_complete) {
  return Fan(build(ambient_dim, std::move(rays), std::move(maximal_cones), declared_complete, false));
}

Fan Fan::from_cones(std::size_t ambient_dim, const std::vector<std::vector<IntVec>>& cones,
                    bool declared_complete) {
  std::vector<IntVec> rays;
  std::map<IntVec, std::size_t> idx;
  std::vector<RaySet> sets;
  for (const auto& c : cones) {
    RaySet s;
    for (const auto& g : c) {
      IntVec p = primitive(g);
      auto [it, inserted] = idx.emplace(p, rays.size());
      if (inserted) rays.push_back(p);
      s.push_back(it->second);
    }
    sets.push_back(s);
  }
  return Fan(ambient_dim, rays, sets, declared_complete);
}

std::size_t Fan::ambient_dim() const { return d_->n; }
std::size_t Fan::num_rays() const { return d_->rays.size(); }
const std::vector<IntVec>& Fan::rays() const { return d_->rays; }
const IntVec& Fan::ray(std::size_t i) const { return d_->rays.at(i); }

std::optional<std::size_t> Fan::ray_index(const IntVec& v) const {
  auto it = d_->ray_lookup.find(v);
  if (it == d_->ray_lookup.end()) return std::nullopt;
  return it->second;
}

std::size_t Fan::require_ray(const IntVec& v) const {
  auto i = ray_index(v);
  if (!i) throw Error(ErrorCode::ConeNotInFan, "vector " + to_string(v) + " is not a ray of the fan");
  return *i;
}

std::size_t Fan::num_cones() const { return d_->cones.size(); }
const std::vector<Cone>& Fan::cones() const { return d_->cones; }
const Cone& Fan::cone(std::size_t id) const { return d_->cones.at(id); }
const ConeGeometry& Fan::geometry(std::size_t id) const { return d_->geoms.at(id); }

std::vector<IntVec> Fan::generators(std::size_t id) const { return gens_of(d_->rays, cone(id).rays); }

std::optional<std::size_t> Fan::find_cone(const RaySet& rays) const {
  RaySet s = rays;
  std::sort(s.begin(), s.end());
  auto it = d_->lookup.find(s);
  if (it == d_->lookup.end()) return std::nullopt;
  return it->second;
}

std::size_t Fan::cone_id(const RaySet& rays) const {
  auto id = find_cone(rays);
  if (!id) throw Error(ErrorCode::ConeNotInFan, "ray set does not span a cone of the fan");
  return *id;
}

std::size_t Fan::cone_id_of_generators(const std::vector<IntVec>& gens) const {
  RaySet s;
  for (const auto& g : gens) s.push_back(require_ray(primitive(g)));
  return cone_id(s);
}

std::vector<std::size_t> Fan::cones_of_dim(std::size_t dim) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < d_->cones.size(); ++i)
    if (d_->cones[i].dim == dim) out.push_back(i);
  return out;
}

const std::vector<std::size_t>& Fan::maximal_cones() const { return d_->maximal; }

std::vector<std::size_t> Fan::cofaces(std::size_t id, std::size_t dim) const {
  std::vector<std::size_t> out;
  const auto& small = cone(id).rays;
  for (std::size_t i = 0; i < d_->cones.size(); ++i)
    if (d_->cones[i].dim == dim && subset_of(small, d_->cones[i].rays)) out.push_back(i);
  return out;
}

bool Fan::contains_cone(std::size_t big, std::size_t small) const {
  return subset_of(cone(small).rays, cone(big).rays);
}

std::size_t Fan::dim() const {
  std::size_t m = 0;
  for (const auto& c : d_->cones) m = std::max(m, c.dim);
  return m;
}

bool Fan::is_pure() const {
  const std::size_t top = dim();
  for (auto i : d_->maximal)
    if (d_->cones[i].dim != top) return false;
  return true;
}

bool Fan::is_simplicial() const {
  for (const auto& c : d_->cones)
    if (c.rays.size() != c.dim) return false;
  return true;
}

bool Fan::declared_complete() const { return d_->declared_complete; }

bool Fan::is_complete() const {
  const std::size_t n = d_->n;
  if (n == 0) return true;
  if (!is_pure() || dim() != n) return false;
  for (auto w : cones_of_dim(n - 1))
    if (cofaces(w, n).size() != 2) return false;
  return true;
}

std::optional<std::size_t> Fan::minimal_cone_containing(const RatVec& x) const {
  if (x.size() != d_->n) throw Error(ErrorCode::RankMismatch, "point has wrong length");
  for (std::size_t i = 0; i < d_->cones.size(); ++i)
    if (d_->geoms[i].contains(x)) return i;
  return std::nullopt;
}

void Fan::check_axioms() const {
  const auto& in = d_->input_cones;
  std::vector<ConeGeometry> geoms;
  for (const auto& c : in) geoms.emplace_back(d_->n, gens_of(d_->rays, c));
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (!geoms[i].is_pointed()) throw Error(ErrorCode::NotAFan, "cone is not strongly convex");
    for (const auto& face : geoms[i].faces()) {
      RaySet s;
      for (auto k : face) s.push_back(in[i][k]);
      if (!find_cone(s)) throw Error(ErrorCode::NotAFan, "fan is not closed under faces");
    }
    for (std::size_t j = i + 1; j < in.size(); ++j)
      check_pair(d_->n, d_->rays, in[i], geoms[i], in[j], geoms[j]);
  }
}

bool Fan::operator==(const Fan& other) const {
  if (d_ == other.d_) return true;
  if (d_->n != other.d_->n || d_->rays != other.d_->rays) return false;
  if (d_->cones.size() != other.d_->cones.size()) return false;
  for (std::size_t i = 0; i < d_->cones.size(); ++i)
    if (d_->cones[i].rays != other.d_->cones[i].rays) return false;
  return true;
}

bool is_face_of(const Fan& fan, const RaySet& small, const RaySet& big) {
  if (!subset_of(small, big)) return false;
  ConeGeometry g(fan.ambient_dim(), gens_of(fan.rays(), big));
  return face_closure(fan.rays(), g, big, small) == small;
}

}  // namespace troplb
