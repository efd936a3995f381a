#include "troplb/trop_line_bundles.hpp"

#include <algorithm>
#include <set>

#include "troplb/error.hpp"
#include "troplb/matrix.hpp"
#include "troplb/trop_hypersurface.hpp"

namespace troplb {

std::vector<std::size_t> strata(const MinkowskiWeight& c) {
  const Fan& fan = c.fan();
  const std::size_t k = c.cone_dim();
  if (k == 0) return {};
  std::set<std::size_t> out;
  for (const auto& [sigma, w] : c.weights())
    for (auto tau : fan.cones_of_dim(k - 1))
      if (fan.contains_cone(sigma, tau)) out.insert(tau);
  return {out.begin(), out.end()};
}

std::vector<RaySet> admissible_sets(const Fan& fan, std::size_t tau, std::size_t k) {
  if (k == 0) throw Error(ErrorCode::DimensionMismatch, "admissible_sets: k must be positive");
  const Cone& t = fan.cone(tau);
  if (t.dim != k - 1) throw Error(ErrorCode::DimensionMismatch, "admissible_sets: cone has dimension != k - 1");
  if (t.rays.size() != t.dim) throw Error(ErrorCode::NonSimplicial, "admissible_sets: cone is not simplicial");
  return {t.rays};
}

namespace {

void require_simplicial_support(const MinkowskiWeight& c) {
  for (const auto& [sigma, w] : c.weights()) {
    const Cone& s = c.fan().cone(sigma);
    if (s.rays.size() != s.dim) throw Error(ErrorCode::NonSimplicial, "support of c is not simplicial");
  }
}

std::map<std::size_t, Int> kappa_on_strata(const MinkowskiWeight& c, const PLFunction& f) {
  MinkowskiWeight k = kappa(c, f);
  std::map<std::size_t, Int> w;
  for (auto tau : strata(c)) w.emplace(tau, k.at(tau));
  return w;
}

std::vector<std::size_t> support_rays(const MinkowskiWeight& c) {
  std::set<std::size_t> rays;
  for (const auto& [sigma, w] : c.weights())
    for (auto r : c.fan().cone(sigma).rays) rays.insert(r);
  return {rays.begin(), rays.end()};
}

}  // namespace

StrataWeights weights_from_divisor(const MinkowskiWeight& c, const ToricDivisor& d) {
  if (d.fan != c.fan()) throw Error(ErrorCode::DimensionMismatch, "divisor and weight live on different fans");
  require_simplicial_support(c);
  return StrataWeights{c, kappa_on_strata(c, support_function(d))};
}

DivisorSolution divisor_from_weights(const StrataWeights& sw) {
  const MinkowskiWeight& c = sw.c;
  const Fan& fan = c.fan();
  require_simplicial_support(c);
  if (!fan.is_simplicial()) throw Error(ErrorCode::NonSimplicialFan, "divisor_from_weights: fan is not simplicial");
  std::vector<std::size_t> walls = strata(c);
  std::vector<std::size_t> rays = support_rays(c);
  const std::size_t r = rays.size();

  IntMatrix k(walls.size(), IntVec(r));
  for (std::size_t j = 0; j < r; ++j) {
    RatVec values = zero_rat(fan.num_rays());
    values[rays[j]] = Rat(-1);
    auto col = kappa_on_strata(c, PLFunction(fan, values));
    for (std::size_t i = 0; i < walls.size(); ++i) k[i][j] = col.at(walls[i]);
  }
  IntVec rhs;
  for (auto tau : walls) {
    auto it = sw.w.find(tau);
    rhs.push_back(it == sw.w.end() ? Int(0) : it->second);
  }
  for (const auto& [tau, x] : sw.w)
    if (std::find(walls.begin(), walls.end(), tau) == walls.end() && x != 0)
      throw Error(ErrorCode::Infeasible, "divisor_from_weights: weight on a cone outside the strata");

  DivisorSolution out;
  out.support_rays = rays;
  std::optional<IntVec> sol = walls.empty() ? std::optional<IntVec>(zero_int(r)) : solve_integer(k, rhs, r);
  if (!sol) throw Error(ErrorCode::Infeasible, "divisor_from_weights: no integral divisor has these weights");
  IntMatrix kernel = walls.empty() ? integer_kernel({}, r) : integer_kernel(k, r);
  IntVec rep = reduce_mod_lattice(*sol, kernel);

  auto expand = [&](const IntVec& v) {
    IntVec full = zero_int(fan.num_rays());
    for (std::size_t j = 0; j < r; ++j) full[rays[j]] = v[j];
    return full;
  };
  out.representative = ToricDivisor(fan, expand(rep));
  for (const auto& b : kernel) out.homogeneous_basis.push_back(expand(b));
  out.kernel_rank = kernel.size();
  IntMatrix u;
  for (auto j : rays) u.push_back(fan.ray(j));
  out.principal_rank = rank(u);
  out.quotient_rank = r - out.principal_rank;
  out.underdetermined = out.kernel_rank > out.principal_rank;
  return out;
}

bool solution_contains(const DivisorSolution& s, const ToricDivisor& d) {
  if (d.fan != s.representative.fan) return false;
  IntVec diff = zero_int(d.fan.num_rays());
  for (auto j : s.support_rays) diff[j] = d.coeffs[j] - s.representative.coeffs[j];
  return in_lattice(diff, s.homogeneous_basis, d.fan.num_rays());
}

BlowupReport blowup_compatibility(const MinkowskiWeight& c, const ToricDivisor& d, std::size_t gamma) {
  const Fan& fan = c.fan();
  bool in_support = false;
  for (const auto& [sigma, w] : c.weights())
    if (fan.contains_cone(sigma, gamma)) in_support = true;
  if (!in_support) throw Error(ErrorCode::ConeNotInFan, "blowup_compatibility: cone is not in Supp(c)");

  BlowupReport rep;
  rep.subdivision = star_subdivide(fan, gamma);
  const Fan& fine = rep.subdivision.fan;
  rep.c_fine = refine_weight(c, fine);
  rep.pulled_back = pullback(d, fine);
  rep.before = weights_from_divisor(c, d);
  rep.after = weights_from_divisor(rep.c_fine, rep.pulled_back);
  const std::size_t k1 = c.cone_dim() - 1;
  for (const auto& [tau, value] : rep.after.w) {
    BlowupRow row;
    row.wall = tau;
    row.home = *fan.minimal_cone_containing(to_rat(fine.geometry(tau).interior_point()));
    row.exceptional = fan.cone(row.home).dim != k1;
    row.actual = value;
    row.expected = row.exceptional ? Int(0) : rep.before.w.at(row.home);
    if (row.actual != row.expected) {
      if (row.exceptional)
        rep.exceptional_zero = false;
      else
        rep.old_walls_preserved = false;
    }
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace troplb
