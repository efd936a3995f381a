#include "troplb/toric_divisors.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "troplb/error.hpp"
#include "troplb/fan_ops.hpp"
#include "troplb/lattice.hpp"
#include "troplb/matrix.hpp"

namespace troplb {

ToricDivisor::ToricDivisor(Fan f, IntVec c) : fan(std::move(f)), coeffs(std::move(c)) {
  if (coeffs.size() != fan.num_rays())
    throw Error(ErrorCode::DimensionMismatch, "divisor needs one coefficient per ray");
}

ToricDivisor ToricDivisor::zero(const Fan& f) { return ToricDivisor(f, zero_int(f.num_rays())); }

ToricDivisor ToricDivisor::prime(const Fan& f, std::size_t ray) {
  return ToricDivisor(f, unit_int(f.num_rays(), ray));
}

ToricDivisor operator+(const ToricDivisor& a, const ToricDivisor& b) {
  if (a.fan != b.fan) throw Error(ErrorCode::DimensionMismatch, "divisors live on different fans");
  return ToricDivisor(a.fan, add(a.coeffs, b.coeffs));
}

ToricDivisor operator-(const ToricDivisor& a, const ToricDivisor& b) {
  if (a.fan != b.fan) throw Error(ErrorCode::DimensionMismatch, "divisors live on different fans");
  return ToricDivisor(a.fan, sub(a.coeffs, b.coeffs));
}

ToricDivisor operator*(const Int& s, const ToricDivisor& d) { return ToricDivisor(d.fan, scale(s, d.coeffs)); }

const IntVec& CartierData::on(const Fan& fan, std::size_t cone) const {
  for (const auto& [id, mm] : m)
    if (fan.contains_cone(id, cone)) return mm;
  throw Error(ErrorCode::ConeNotInFan, "Cartier data: cone lies in no maximal cone");
}

namespace {

IntMatrix ray_rows(const Fan& fan, const RaySet& rays) {
  IntMatrix u;
  for (auto r : rays) u.push_back(fan.ray(r));
  return u;
}

IntVec local_rhs(const ToricDivisor& d, const RaySet& rays) {
  IntVec b;
  for (auto r : rays) b.push_back(Int(-d.coeffs[r]));
  return b;
}

bool box_for_each(const IntVec& lo, const IntVec& hi, const std::function<void(const IntVec&)>& fn) {
  const std::size_t n = lo.size();
  for (std::size_t i = 0; i < n; ++i)
    if (lo[i] > hi[i]) return false;
  IntVec cur = lo;
  while (true) {
    fn(cur);
    std::size_t i = 0;
    while (i < n) {
      if (cur[i] < hi[i]) {
        ++cur[i];
        break;
      }
      cur[i] = lo[i];
      ++i;
    }
    if (i == n) return true;
  }
}

bool in_dual(const IntVec& p, const IntMatrix& a) {
  for (const auto& row : a)
    if (dot(p, row) < 0) return false;
  return true;
}

// Hilbert basis of the dual of the full-dimensional pointed cone generated by `a` in Z^d.
std::vector<IntVec> dual_hilbert_basis(std::size_t d, const IntMatrix& a) {
  ConeGeometry cone(d, a);
  const IntMatrix& extreme = cone.facets();
  IntVec lo = zero_int(d), hi = zero_int(d);
  for (const auto& r : extreme)
    for (std::size_t j = 0; j < d; ++j) {
      if (r[j] < 0) lo[j] += r[j];
      if (r[j] > 0) hi[j] += r[j];
    }
  std::vector<IntVec> cands;
  box_for_each(lo, hi, [&](const IntVec& p) {
    if (!is_zero(p) && in_dual(p, a)) cands.push_back(p);
  });
  std::vector<IntVec> out;
  for (const auto& h : cands) {
    bool reducible = false;
    for (const auto& g : cands) {
      if (g == h) continue;
      IntVec diff = sub(h, g);
      if (!is_zero(diff) && in_dual(diff, a)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) out.push_back(h);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::optional<IntVec> local_character(const ToricDivisor& d, std::size_t cone) {
  const Fan& fan = d.fan;
  const RaySet& rays = fan.cone(cone).rays;
  if (rays.empty()) return zero_int(fan.ambient_dim());
  auto sol = solve_integer(ray_rows(fan, rays), local_rhs(d, rays), fan.ambient_dim());
  if (!sol) return std::nullopt;
  return reduce_mod_lattice(*sol, fan.geometry(cone).equations());
}

CartierData cartier_data(const ToricDivisor& d) {
  const Fan& fan = d.fan;
  CartierData cd;
  for (auto id : fan.maximal_cones()) {
    auto m = local_character(d, id);
    if (!m) {
      const RaySet& rays = fan.cone(id).rays;
      auto q = solve_rational(to_rat(ray_rows(fan, rays)), to_rat(local_rhs(d, rays)), fan.ambient_dim());
      std::string msg = "divisor is not Cartier on cone " + to_string(IntVec(rays.begin(), rays.end()));
      throw NotCartierError(rays, q, msg);
    }
    cd.m.emplace(id, *m);
  }
  return cd;
}

bool is_cartier(const ToricDivisor& d) {
  for (auto id : d.fan.maximal_cones())
    if (!local_character(d, id)) return false;
  return true;
}

LatticePolytope polytope(const ToricDivisor& d) {
  RatMatrix a;
  RatVec b;
  for (std::size_t r = 0; r < d.fan.num_rays(); ++r) {
    a.push_back(to_rat(d.fan.ray(r)));
    b.push_back(Rat(-d.coeffs[r]));
  }
  return Polyhedron::from_inequalities(d.fan.ambient_dim(), std::move(a), std::move(b));
}

LocalSections local_sections(const ToricDivisor& d, std::size_t sigma) {
  const Fan& fan = d.fan;
  const std::size_t n = fan.ambient_dim();
  const RaySet& rays = fan.cone(sigma).rays;
  LocalSections out;
  for (auto r : rays) {
    out.inequalities.push_back(to_rat(fan.ray(r)));
    out.rhs.push_back(Rat(-d.coeffs[r]));
  }
  out.shift = local_character(d, sigma);

  const IntMatrix& perp = fan.geometry(sigma).equations();
  IntMatrix basis = integer_kernel(perp, n);  // saturated lattice of span(sigma)
  const std::size_t k = basis.size();
  auto lift = [&](const IntVec& h) {
    auto m = solve_integer(basis, h, n);
    return reduce_mod_lattice(*m, perp);
  };

  if (k == 0) {
    out.module_generators.push_back(zero_int(n));
  } else {
    RatMatrix bt(n, RatVec(k));
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < n; ++i) bt[i][j] = Rat(basis[j][i]);
    IntMatrix a;
    for (auto r : rays) a.push_back(to_int(*solve_rational(bt, to_rat(fan.ray(r)), k)));
    for (const auto& h : dual_hilbert_basis(k, a)) out.hilbert_basis.push_back(lift(h));

    RatMatrix pa = to_rat(a);
    RatVec pb;
    for (auto r : rays) pb.push_back(Rat(-d.coeffs[r]));
    Polyhedron p = Polyhedron::from_inequalities(k, pa, pb);
    IntVec lo(k), hi(k);
    ConeGeometry cone(k, a);
    for (std::size_t j = 0; j < k; ++j) {
      Rat mn = p.vertices().front()[j], mx = mn;
      for (const auto& v : p.vertices()) {
        if (v[j] < mn) mn = v[j];
        if (v[j] > mx) mx = v[j];
      }
      lo[j] = floor_div(mn.get_num(), mn.get_den());
      hi[j] = ceil_div(mx.get_num(), mx.get_den());
      for (const auto& r : cone.facets()) {
        if (r[j] < 0) lo[j] += r[j];
        if (r[j] > 0) hi[j] += r[j];
      }
    }
    std::vector<IntVec> pts;
    box_for_each(lo, hi, [&](const IntVec& x) {
      if (p.contains(to_rat(x))) pts.push_back(x);
    });
    for (const auto& x : pts) {
      bool minimal = true;
      for (const auto& y : pts)
        if (y != x && in_dual(sub(x, y), a)) {
          minimal = false;
          break;
        }
      if (minimal) out.module_generators.push_back(lift(x));
    }
    std::sort(out.module_generators.begin(), out.module_generators.end());
  }
  for (const auto& e : perp) {
    out.hilbert_basis.push_back(e);
    out.hilbert_basis.push_back(negate(e));
  }
  std::sort(out.hilbert_basis.begin(), out.hilbert_basis.end());
  return out;
}

ToricDivisor div_char(const IntVec& m, const Fan& fan) {
  if (m.size() != fan.ambient_dim()) throw Error(ErrorCode::RankMismatch, "div_char: rank mismatch");
  IntVec c;
  for (const auto& u : fan.rays()) c.push_back(dot(m, u));
  return ToricDivisor(fan, c);
}

bool is_wall(const Fan& fan, std::size_t tau) {
  return fan.cofaces(tau, fan.cone(tau).dim + 1).size() == 2;
}

std::vector<std::size_t> walls(const Fan& fan) {
  std::vector<std::size_t> out;
  for (std::size_t id = 0; id < fan.num_cones(); ++id)
    if (is_wall(fan, id)) out.push_back(id);
  return out;
}

Int intersect_curve(const ToricDivisor& d, const CartierData& cd, std::size_t tau) {
  const Fan& fan = d.fan;
  auto co = fan.cofaces(tau, fan.cone(tau).dim + 1);
  if (co.size() != 2) throw Error(ErrorCode::NotAWall, "intersect_curve: cone is not a wall");
  const IntVec& m1 = cd.on(fan, co[0]);
  const IntVec& m2 = cd.on(fan, co[1]);
  IntVec v1 = lateral_generator(fan, tau, co[0]).lift;
  return dot(sub(m2, m1), v1);
}

Int intersect_curve(const ToricDivisor& d, std::size_t tau) {
  if (tau >= d.fan.num_cones()) throw Error(ErrorCode::ConeNotInFan, "intersect_curve: unknown cone");
  if (!is_wall(d.fan, tau)) throw Error(ErrorCode::NotAWall, "intersect_curve: cone is not a wall");
  return intersect_curve(d, cartier_data(d), tau);
}

std::optional<IntVec> is_principal(const ToricDivisor& d) {
  const std::size_t n = d.fan.ambient_dim();
  if (d.fan.num_rays() == 0) return zero_int(n);
  auto m = solve_integer(d.fan.rays(), d.coeffs, n);
  if (!m) return std::nullopt;
  IntMatrix lin = integer_kernel(d.fan.rays(), n);
  return reduce_mod_lattice(*m, lattice_basis(lin, n));
}

bool numerically_trivial(const ToricDivisor& d) {
  CartierData cd = cartier_data(d);
  const Fan& fan = d.fan;
  if (fan.dim() == 0) return true;
  for (auto tau : fan.cones_of_dim(fan.dim() - 1))
    if (is_wall(fan, tau) && intersect_curve(d, cd, tau) != 0) return false;
  return true;
}

PLFunction::PLFunction(Fan fan, RatVec values) : fan_(std::move(fan)), values_(std::move(values)) {
  if (!fan_.is_simplicial()) throw Error(ErrorCode::NonSimplicialFan, "PL functions need a simplicial fan");
  if (values_.size() != fan_.num_rays())
    throw Error(ErrorCode::DimensionMismatch, "PL function needs one value per ray");
}

PLFunction PLFunction::linear(const Fan& fan, const RatVec& m) {
  RatVec v;
  for (const auto& u : fan.rays()) v.push_back(dot(m, u));
  return PLFunction(fan, v);
}

RatVec PLFunction::linear_on(std::size_t id) const {
  const RaySet& rays = fan_.cone(id).rays;
  const std::size_t n = fan_.ambient_dim();
  if (rays.empty()) return zero_rat(n);
  RatMatrix a;
  RatVec b;
  for (auto r : rays) {
    a.push_back(to_rat(fan_.ray(r)));
    b.push_back(values_[r]);
  }
  return *solve_rational(a, b, n);
}

std::optional<Rat> PLFunction::eval(const RatVec& x) const {
  auto c = fan_.minimal_cone_containing(x);
  if (!c) return std::nullopt;
  return dot(linear_on(*c), x);
}

Rat PLFunction::eval_on_support(const RatVec& x) const {
  auto v = eval(x);
  if (!v) throw Error(ErrorCode::FunctionNotLinearOnCone, "PL function evaluated outside its support");
  return *v;
}

RatVec PLFunction::linear_on_generators(const std::vector<IntVec>& gens) const {
  const std::size_t n = fan_.ambient_dim();
  IntVec s = zero_int(n);
  for (const auto& g : gens) s = add(s, g);
  auto c = fan_.minimal_cone_containing(to_rat(s));
  if (c) {
    bool all = true;
    for (const auto& g : gens)
      if (!fan_.geometry(*c).contains(g)) {
        all = false;
        break;
      }
    if (all) return linear_on(*c);
  }
  throw Error(ErrorCode::FunctionNotLinearOnCone, "cone is not inside a single domain of linearity");
}

PLFunction PLFunction::operator+(const PLFunction& o) const {
  if (fan_ != o.fan_) throw Error(ErrorCode::DimensionMismatch, "PL functions on different fans");
  return PLFunction(fan_, add(values_, o.values_));
}

PLFunction PLFunction::operator*(const Rat& s) const { return PLFunction(fan_, scale(s, values_)); }

PLFunction support_function(const ToricDivisor& d) {
  cartier_data(d);
  if (!d.fan.is_simplicial()) throw Error(ErrorCode::NonSimplicialFan, "support_function: fan is not simplicial");
  RatVec v;
  for (const auto& c : d.coeffs) v.push_back(Rat(-c));
  return PLFunction(d.fan, v);
}

ToricDivisor pullback(const ToricDivisor& d, const Fan& fine) {
  CartierData cd = cartier_data(d);
  if (!refines(fine, d.fan)) throw Error(ErrorCode::NotARefinement, "pullback: fan is not a refinement");
  IntVec c;
  for (const auto& u : fine.rays()) {
    auto cone = d.fan.minimal_cone_containing(to_rat(u));
    c.push_back(-dot(cd.on(d.fan, *cone), u));
  }
  return ToricDivisor(fine, c);
}

}  // namespace troplb
