#include <doctest.h>

#include <random>
#include <set>

#include "support.hpp"
#include "troplb/error.hpp"
#include "troplb/fan_ops.hpp"
#include "troplb/lattice.hpp"
#include "troplb/minkowski_weights.hpp"
#include "troplb/trop_hypersurface.hpp"

using namespace troplb;
using namespace test_support;

namespace {

std::size_t cone_of(const Fan& f, std::initializer_list<IntVec> gens) {
  return f.cone_id_of_generators(std::vector<IntVec>(gens));
}

MinkowskiWeight ray_weights(const Fan& f, std::initializer_list<std::pair<IntVec, long>> ws) {
  std::map<std::size_t, Int> w;
  for (const auto& [u, x] : ws) w[f.cone_id({f.require_ray(u)})] = x;
  return MinkowskiWeight(f, f.ambient_dim() - 1, w);
}

Fan tropical_line_fan() {
  return Fan(2, {iv({1, 0}), iv({0, 1}), iv({-1, -1})}, {{0}, {1}, {2}});
}

LaurentSupport support_of(std::size_t n, std::initializer_list<IntVec> e) { return LaurentSupport(n, e); }

// Dual-edge oracle for plane curves: each Newton polygon edge contributes its
// primitive inward normal with weight equal to its lattice length.
std::map<IntVec, Int> polygon_edge_oracle(const std::vector<IntVec>& pts) {
  std::map<IntVec, Int> out;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      IntVec d = sub(pts[j], pts[i]);
      IntVec normal = primitive(IntVec{-d[1], d[0]});
      int side = 0;
      bool edge = true;
      for (const auto& q : pts) {
        int s = sgn(dot(normal, sub(q, pts[i])));
        if (s == 0) continue;
        if (side == 0) side = s;
        if (s != side) edge = false;
      }
      if (!edge) continue;
      if (side < 0) normal = negate(normal);
      // Only count maximal edges: endpoints must be extreme on the line.
      Int len = content(d);
      bool maximal = true;
      for (const auto& q : pts) {
        if (dot(normal, sub(q, pts[i])) != 0) continue;
        IntVec a = sub(q, pts[i]);
        Int t = dot(a, d);
        if (t < 0 || t > dot(d, d)) maximal = false;
      }
      if (maximal) out[normal] += len;
    }
  return out;
}

}  // namespace

TEST_CASE("is_balanced") {
  Fan line = tropical_line_fan();
  CHECK(is_balanced(ray_weights(line, {{iv({1, 0}), 1}, {iv({0, 1}), 1}, {iv({-1, -1}), 1}})).balanced);
  BalanceReport bad = is_balanced(ray_weights(line, {{iv({1, 0}), 2}, {iv({0, 1}), 1}, {iv({-1, -1}), 1}}));
  CHECK_FALSE(bad.balanced);
  CHECK(bad.failing == std::vector<std::size_t>{0});
}

TEST_CASE("tropicalize Example 0") {
  WeightedFan t = tropicalize(support_of(3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1}), iv({0, 0, 0})}));
  const Fan& f = t.fan();
  CHECK(f.rays() == std::vector<IntVec>{iv({-1, -1, -1}), iv({0, 0, 1}), iv({0, 1, 0}), iv({1, 0, 0})});
  CHECK(f.cones_of_dim(2).size() == 6);
  CHECK(f.maximal_cones().size() == 6);
  CHECK(t.weights().size() == 6);
  for (const auto& [id, w] : t.weights()) CHECK(w == 1);
  CHECK(is_balanced(t).balanced);
  CHECK(check_tropical_support(ex0_fan(), t));
  Fan e0 = ex0_fan();
  Fan sub = star_subdivide(e0, cone_of(e0, {iv({1, 0, 0}), iv({0, 1, 0})})).fan;
  CHECK(check_tropical_support(sub, t));
  CHECK_FALSE(check_tropical_support(p2_fan(), t));
  CHECK(support(t) == f);
}

TEST_CASE("tropicalize Example 1 and a plane conic") {
  WeightedFan t = tropicalize(support_of(3, {iv({1, 1, 0}), iv({0, 0, 1})}));
  CHECK(t.fan() == plane_fan());
  for (const auto& [id, w] : t.weights()) CHECK(w == 1);
  CHECK(t.weights().size() == 4);
  for (const auto& u : t.fan().rays()) CHECK(u[0] + u[1] == u[2]);
  CHECK(is_balanced(t).balanced);

  WeightedFan c = tropicalize(support_of(2, {iv({0, 0}), iv({1, 0}), iv({0, 2})}));
  CHECK(c.at(cone_of(c.fan(), {iv({0, 1})})) == 1);
  CHECK(c.at(cone_of(c.fan(), {iv({1, 0})})) == 2);
  CHECK(c.at(cone_of(c.fan(), {iv({-2, -1})})) == 1);

  CHECK_THROWS_AS(tropicalize(support_of(2, {iv({1, 1})})), Error);
}

TEST_CASE("newton_polytope") {
  LatticePolytope p = newton_polytope(support_of(3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1}), iv({0, 0, 0})}));
  CHECK(p.vertices().size() == 4);
  CHECK(p.dim() == 3);
  LatticePolytope s = newton_polytope(support_of(3, {iv({1, 1, 0}), iv({0, 0, 1})}));
  CHECK(s.vertices() == std::vector<RatVec>{rv({0, 0, 1}), rv({1, 1, 0})});
  CHECK(s.dim() == 1);
  LatticePolytope pt = newton_polytope(support_of(2, {iv({2, 3})}));
  CHECK(pt.dim() == 0);
  LatticePolytope red = newton_polytope(support_of(1, {iv({0}), iv({1}), iv({2})}));
  CHECK(red.vertices() == std::vector<RatVec>{rv({0}), rv({2})});
}

TEST_CASE("random plane curves match the dual-edge oracle") {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-3, 3), count(2, 8);
  for (int trial = 0; trial < 60; ++trial) {
    std::set<IntVec> e;
    int k = count(rng);
    while (static_cast<int>(e.size()) < k) e.insert(iv({coord(rng), coord(rng)}));
    std::vector<IntVec> pts(e.begin(), e.end());
    LaurentSupport f(2, pts);
    if (newton_polytope(f).dim() < 1) continue;
    WeightedFan t = tropicalize(f);
    CHECK(is_balanced(t).balanced);
    if (newton_polytope(f).dim() < 2) continue;
    std::map<IntVec, Int> got;
    for (const auto& [id, w] : t.weights()) got[t.fan().generators(id).front()] = w;
    CHECK(got == polygon_edge_oracle(pts));
    // Translation invariance.
    std::vector<IntVec> shifted;
    for (const auto& p : pts) shifted.push_back(add(p, iv({2, -1})));
    CHECK(tropicalize(LaurentSupport(2, shifted)) == t);
  }
}

TEST_CASE("tropicalize with unimodularization") {
  WeightedFan t = tropicalize(support_of(2, {iv({0, 0}), iv({3, 1}), iv({1, 2})}), {true});
  CHECK(is_unimodular(t.fan()).unimodular);
  CHECK(is_balanced(t).balanced);
}

TEST_CASE("kappa and degree") {
  Fan line = tropical_line_fan();
  MinkowskiWeight c = ray_weights(line, {{iv({1, 0}), 1}, {iv({0, 1}), 1}, {iv({-1, -1}), 1}});
  Fan p2 = p2_fan();
  PLFunction fh = support_function(ToricDivisor::prime(p2, p2.require_ray(iv({-1, -1}))));
  MinkowskiWeight k = kappa(c, fh);
  CHECK(k.codim() == 2);
  CHECK(degree(k) == 1);
  CHECK(degree(kappa(c * Int(2), fh)) == 2);
  CHECK(degree(kappa(c, PLFunction::linear(p2, rv({3, -7})))) == 0);
  CHECK(degree(MinkowskiWeight(line, 2, {})) == 0);
  CHECK_THROWS_AS(degree(c), Error);
  MinkowskiWeight bad = ray_weights(line, {{iv({1, 0}), 2}, {iv({0, 1}), 1}, {iv({-1, -1}), 1}});
  CHECK_THROWS_AS(kappa(bad, fh), Error);
}

TEST_CASE("kappa is independent of lifts") {
  std::mt19937_64 rng(seed + 1);
  std::uniform_int_distribution<int> coef(-5, 5);
  Fan pl = plane_fan();
  MinkowskiWeight c = MinkowskiWeight::constant(pl, 1, 1);
  for (std::size_t r = 0; r < pl.num_rays(); ++r) {
    PLFunction f = support_function(ToricDivisor::prime(pl, r));
    MinkowskiWeight base = kappa(c, f);
    LiftHook hook = [&](std::size_t tau, std::size_t, const IntVec& v) {
      IntVec out = v;
      for (const auto& b : quotient_by_cone(pl, tau).sublattice) out = add(out, scale(Int(coef(rng)), b));
      return out;
    };
    for (int i = 0; i < 5; ++i) CHECK(kappa(c, f, hook) == base);
  }
}

TEST_CASE("divisor_to_weight") {
  Fan p2 = p2_fan();
  ToricDivisor h = ToricDivisor::prime(p2, p2.require_ray(iv({-1, -1})));
  MinkowskiWeight w = divisor_to_weight(h);
  CHECK(w == MinkowskiWeight::constant(p2, 1, 1));
  CHECK(is_balanced(w).balanced);
  CHECK(divisor_to_weight(div_char(iv({4, 1}), p2)) == MinkowskiWeight(p2, 1, {}));
  ToricDivisor d2 = ToricDivisor::prime(p2, 0);
  CHECK(divisor_to_weight(h + d2) == divisor_to_weight(h) + divisor_to_weight(d2));

  Fan f1 = star_subdivide(p2, cone_of(p2, {iv({1, 0}), iv({0, 1})})).fan;
  MinkowskiWeight e = divisor_to_weight(ToricDivisor::prime(f1, f1.require_ray(iv({1, 1}))));
  CHECK(e.at(cone_of(f1, {iv({-1, -1})})) == 0);
  CHECK(e.at(cone_of(f1, {iv({0, 1})})) == 1);
  CHECK(e.at(cone_of(f1, {iv({1, 1})})) == -1);
  CHECK(e.at(cone_of(f1, {iv({1, 0})})) == 1);
  CHECK(is_balanced(e).balanced);
}

TEST_CASE("strata_equivalent and lifts") {
  Fan pl = plane_fan();
  MinkowskiWeight c = MinkowskiWeight::constant(pl, 1, 1);
  ToricDivisor d1 = ToricDivisor::prime(pl, pl.require_ray(iv({1, 0, 1})));
  ToricDivisor d2 = ToricDivisor::prime(pl, pl.require_ray(iv({0, 1, 1})));
  CHECK(strata_equivalent(d1, d1 + div_char(iv({1, 2, 3}), pl), c));
  CHECK_FALSE(strata_equivalent(d1, d2, c));
  CHECK(strata_equivalent(d2, d2, c));
  PLFunction f = support_function(d1);
  CHECK(lifts(f, d1, c));
  CHECK(lifts(f + PLFunction::linear(pl, rv({1, -1, 2})), d1, c));
  CHECK_FALSE(lifts(f * Rat(2), d1, c));
}
