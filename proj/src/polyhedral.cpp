#include "troplb/polyhedral.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "troplb/error.hpp"
#include "troplb/matrix.hpp"

namespace troplb {

ConeGeometry::ConeGeometry(std::size_t ambient_dim, std::vector<IntVec> generators)
    : ambient_dim_(ambient_dim), generators_(std::move(generators)) {
  IntMatrix nonzero;
  std::set<IntVec> dirs;
  for (const auto& g : generators_) {
    if (g.size() != ambient_dim_) throw Error(ErrorCode::RankMismatch, "cone generator has wrong length");
    if (is_zero(g)) continue;
    nonzero.push_back(g);
    dirs.insert(primitive(g));
  }
  dim_ = rank(nonzero);
  equations_ = integer_kernel(nonzero, ambient_dim_);
  if (dim_ == 0) return;

  std::vector<IntVec> dir_list(dirs.begin(), dirs.end());
  std::set<IntVec> found;
  for_each_combination(dir_list.size(), dim_ - 1, [&](const std::vector<std::size_t>& subset) {
    IntMatrix m = equations_;
    for (auto i : subset) m.push_back(dir_list[i]);
    if (rank(m) != ambient_dim_ - 1) return true;
    IntMatrix ker = rational_kernel(to_rat(m), ambient_dim_);
    IntVec a = ker.front();
    bool pos = false, neg = false;
    for (const auto& d : dir_list) {
      int s = sgn(dot(a, d));
      if (s > 0) pos = true;
      if (s < 0) neg = true;
    }
    if (pos && neg) return true;
    if (neg) a = negate(a);
    found.insert(a);
    return true;
  });
  facets_.assign(found.begin(), found.end());
  IntMatrix all = equations_;
  all.insert(all.end(), facets_.begin(), facets_.end());
  pointed_ = rank(all) == ambient_dim_;
}

bool ConeGeometry::contains(const RatVec& x) const {
  for (const auto& e : equations_)
    if (dot(x, e) != 0) return false;
  for (const auto& f : facets_)
    if (dot(x, f) < 0) return false;
  return true;
}

bool ConeGeometry::contains(const IntVec& x) const { return contains(to_rat(x)); }

bool ConeGeometry::in_relative_interior(const RatVec& x) const {
  if (!contains(x)) return false;
  for (const auto& f : facets_)
    if (dot(x, f) == 0) return false;
  return true;
}

std::vector<std::size_t> ConeGeometry::extreme_generators() const {
  std::vector<std::size_t> out;
  std::set<IntVec> seen;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const auto& g = generators_[i];
    if (is_zero(g)) continue;
    IntVec p = primitive(g);
    if (!seen.insert(p).second) continue;
    IntMatrix m = equations_;
    for (const auto& f : facets_)
      if (dot(f, g) == 0) m.push_back(f);
    if (rank(m) == ambient_dim_ - 1) out.push_back(i);
  }
  return out;
}

std::vector<std::vector<std::size_t>> ConeGeometry::faces() const {
  std::vector<std::size_t> full;
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (!is_zero(generators_[i])) full.push_back(i);
  std::set<std::vector<std::size_t>> seen{full};
  std::deque<std::vector<std::size_t>> queue{full};
  while (!queue.empty()) {
    auto face = queue.front();
    queue.pop_front();
    for (const auto& f : facets_) {
      std::vector<std::size_t> sub;
      for (auto i : face)
        if (dot(f, generators_[i]) == 0) sub.push_back(i);
      if (seen.insert(sub).second) queue.push_back(sub);
    }
  }
  return {seen.begin(), seen.end()};
}

IntVec ConeGeometry::interior_point() const {
  IntVec s = zero_int(ambient_dim_);
  for (const auto& g : generators_) s = add(s, g);
  return s;
}

VDescription enumerate_vertices(std::size_t n, const RatMatrix& a, const RatVec& b,
                                const RatMatrix& e, const RatVec& e_rhs) {
  VDescription out;
  if (!e.empty() && !solve_rational(e, e_rhs, n)) return out;

  RatMatrix all = a;
  all.insert(all.end(), e.begin(), e.end());
  IntMatrix lin = all.empty() ? integer_kernel({}, n) : rational_kernel(all, n);
  out.lineality = lin;
  const std::size_t r = n - lin.size();
  const std::size_t r_eq = e.empty() ? 0 : rank(e);
  const std::size_t need = r - r_eq;
  RatMatrix lin_rat = to_rat(lin);

  auto feasible = [&](const RatVec& x) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (dot(a[i], x) < b[i]) return false;
    return true;
  };

  std::set<RatVec> points;
  for_each_combination(a.size(), need, [&](const std::vector<std::size_t>& subset) {
    RatMatrix sys;
    RatVec rhs;
    for (auto i : subset) {
      sys.push_back(a[i]);
      rhs.push_back(b[i]);
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      sys.push_back(e[i]);
      rhs.push_back(e_rhs[i]);
    }
    if (rank(sys) != r) return true;
    for (const auto& l : lin_rat) {
      sys.push_back(l);
      rhs.push_back(Rat(0));
    }
    auto x = solve_rational(sys, rhs, n);
    if (x && feasible(*x)) points.insert(*x);
    return true;
  });
  out.points.assign(points.begin(), points.end());
  if (out.points.empty()) {
    out.lineality.clear();
    return out;
  }

  std::set<IntVec> rays;
  if (need >= 1) {
    for_each_combination(a.size(), need - 1, [&](const std::vector<std::size_t>& subset) {
      RatMatrix sys;
      for (auto i : subset) sys.push_back(a[i]);
      sys.insert(sys.end(), e.begin(), e.end());
      sys.insert(sys.end(), lin_rat.begin(), lin_rat.end());
      if (rank(sys) != n - 1) return true;
      IntVec d = rational_kernel(sys, n).front();
      for (int sign = 0; sign < 2; ++sign) {
        bool ok = true;
        for (const auto& row : a)
          if (dot(row, d) < 0) {
            ok = false;
            break;
          }
        if (ok) {
          rays.insert(d);
          break;
        }
        d = negate(d);
      }
      return true;
    });
  }
  out.rays.assign(rays.begin(), rays.end());
  return out;
}

std::vector<IntVec> cone_rays(std::size_t n, const RatMatrix& a, const RatMatrix& e) {
  VDescription v = enumerate_vertices(n, a, zero_rat(a.size()), e, zero_rat(e.size()));
  if (!v.lineality.empty()) throw Error(ErrorCode::NotAFan, "cone_rays: cone is not pointed");
  return v.rays;
}

Polyhedron Polyhedron::from_inequalities(std::size_t n, RatMatrix a, RatVec b) {
  Polyhedron p;
  p.n_ = n;
  p.a_ = std::move(a);
  p.b_ = std::move(b);
  p.v_ = enumerate_vertices(n, p.a_, p.b_);
  return p;
}

Polyhedron Polyhedron::convex_hull(std::size_t n, const std::vector<RatVec>& points,
                                   const std::vector<IntVec>& rays) {
  if (points.empty()) throw Error(ErrorCode::EmptyPolytope, "convex_hull: no points");
  std::vector<IntVec> gens;
  for (const auto& pt : points) {
    RatVec h = pt;
    h.push_back(Rat(1));
    gens.push_back(primitive(h));
  }
  for (const auto& r : rays) {
    IntVec h = r;
    h.push_back(Int(0));
    gens.push_back(h);
  }
  ConeGeometry cone(n + 1, gens);
  RatMatrix a;
  RatVec b;
  auto add_row = [&](const IntVec& f, int sign) {
    RatVec row(n);
    for (std::size_t i = 0; i < n; ++i) row[i] = Rat(f[i] * sign);
    a.push_back(row);
    b.push_back(Rat(-f[n] * sign));
  };
  for (const auto& f : cone.facets()) add_row(f, 1);
  for (const auto& eq : cone.equations()) {
    add_row(eq, 1);
    add_row(eq, -1);
  }
  return from_inequalities(n, std::move(a), std::move(b));
}

int Polyhedron::dim() const {
  if (is_empty()) return -1;
  RatMatrix dirs;
  for (const auto& p : v_.points) dirs.push_back(sub(p, v_.points.front()));
  for (const auto& r : v_.rays) dirs.push_back(to_rat(r));
  for (const auto& l : v_.lineality) dirs.push_back(to_rat(l));
  return static_cast<int>(rank(dirs));
}

bool Polyhedron::contains(const RatVec& x) const {
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (dot(a_[i], x) < b_[i]) return false;
  return true;
}

std::vector<IntVec> Polyhedron::lattice_points() const {
  if (!is_bounded()) throw Error(ErrorCode::DimensionMismatch, "lattice_points: polyhedron is unbounded");
  std::vector<IntVec> out;
  if (is_empty()) return out;
  IntVec lo(n_), hi(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    Rat mn = v_.points.front()[i], mx = mn;
    for (const auto& p : v_.points) {
      if (p[i] < mn) mn = p[i];
      if (p[i] > mx) mx = p[i];
    }
    lo[i] = ceil_div(mn.get_num(), mn.get_den());
    hi[i] = floor_div(mx.get_num(), mx.get_den());
  }
  IntVec cur(n_);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n_) {
      if (contains(to_rat(cur))) out.push_back(cur);
      return;
    }
    for (Int x = lo[i]; x <= hi[i]; ++x) {
      cur[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

std::optional<Rat> Polyhedron::min_pairing(const RatVec& u) const {
  if (is_empty()) return std::nullopt;
  for (const auto& r : v_.rays)
    if (dot(u, r) < 0) return std::nullopt;
  for (const auto& l : v_.lineality)
    if (dot(u, l) != 0) return std::nullopt;
  Rat best = dot(v_.points.front(), u);
  for (const auto& p : v_.points) {
    Rat val = dot(p, u);
    if (val < best) best = val;
  }
  return best;
}

Polyhedron Polyhedron::translate(const RatVec& shift) const {
  RatVec b = b_;
  for (std::size_t i = 0; i < a_.size(); ++i) b[i] += dot(a_[i], shift);
  return from_inequalities(n_, a_, b);
}

bool Polyhedron::same_set(const Polyhedron& other) const {
  if (n_ != other.n_) return false;
  if (v_.points != other.v_.points || v_.rays != other.v_.rays) return false;
  return rref(to_rat(v_.lineality), n_) == rref(to_rat(other.v_.lineality), n_);
}

}  // namespace troplb
