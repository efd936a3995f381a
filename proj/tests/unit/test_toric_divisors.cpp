#include <doctest.h>

#include "support.hpp"
#include "troplb/error.hpp"
#include "troplb/fan_ops.hpp"
#include "troplb/toric_divisors.hpp"

using namespace troplb;
using namespace test_support;

namespace {

ToricDivisor prime_at(const Fan& f, const IntVec& u) { return ToricDivisor::prime(f, f.require_ray(u)); }

std::size_t cone_of(const Fan& f, std::initializer_list<IntVec> gens) {
  return f.cone_id_of_generators(std::vector<IntVec>(gens));
}

Fan f1_fan() {
  Fan p2 = p2_fan();
  return star_subdivide(p2, cone_of(p2, {iv({1, 0}), iv({0, 1})})).fan;
}

}  // namespace

TEST_CASE("cartier_data on P2") {
  Fan p2 = p2_fan();
  ToricDivisor h = prime_at(p2, iv({-1, -1}));
  CartierData cd = cartier_data(h);
  CHECK(cd.on(p2, cone_of(p2, {iv({1, 0}), iv({0, 1})})) == iv({0, 0}));
  CHECK(cd.on(p2, cone_of(p2, {iv({0, 1}), iv({-1, -1})})) == iv({1, 0}));
  CHECK(cd.on(p2, cone_of(p2, {iv({1, 0}), iv({-1, -1})})) == iv({0, 1}));
  for (const auto& [id, m] : cartier_data(ToricDivisor::zero(p2)).m) CHECK(is_zero(m));
}

TEST_CASE("non-Cartier divisor carries the rational solution") {
  Fan f = Fan::from_cones(2, {{iv({1, 0}), iv({1, 2})}});
  ToricDivisor d = prime_at(f, iv({1, 0}));
  try {
    cartier_data(d);
    FAIL("expected NotCartier");
  } catch (const NotCartierError& e) {
    REQUIRE(e.rational_solution().has_value());
    CHECK(*e.rational_solution() == RatVec{Rat(-1), Rat(1, 2)});
    CHECK(e.cone().size() == 2);
  }
  CHECK_FALSE(is_cartier(d));
}

TEST_CASE("Cartier data on a lower-dimensional cone is integral") {
  // Ray (2,3): zeroing a coordinate would force a fraction.
  Fan f = Fan::from_cones(2, {{iv({2, 3})}});
  CartierData cd = cartier_data(ToricDivisor::prime(f, 0));
  const IntVec& m = cd.m.begin()->second;
  CHECK(dot(m, iv({2, 3})) == -1);
}

TEST_CASE("polytope") {
  Fan p2 = p2_fan();
  ToricDivisor h = prime_at(p2, iv({-1, -1}));
  LatticePolytope p = polytope(h);
  CHECK(p.vertices() == std::vector<RatVec>{rv({0, 0}), rv({0, 1}), rv({1, 0})});
  CHECK(p.lattice_points().size() == 3);
  LatticePolytope z = polytope(ToricDivisor::zero(p2));
  CHECK(z.vertices() == std::vector<RatVec>{rv({0, 0})});
  CHECK(polytope(Int(-1) * h).is_empty());

  IntVec m = iv({2, -1});
  CHECK(polytope(h + div_char(m, p2)).same_set(p.translate(to_rat(negate(m)))));
}

TEST_CASE("local_sections") {
  Fan p2 = p2_fan();
  ToricDivisor h = prime_at(p2, iv({-1, -1}));
  LocalSections ls = local_sections(h, cone_of(p2, {iv({1, 0}), iv({0, 1})}));
  CHECK(ls.hilbert_basis == std::vector<IntVec>{iv({0, 1}), iv({1, 0})});
  CHECK(ls.shift == iv({0, 0}));
  CHECK(ls.inequalities.size() == 2);

  LocalSections z = local_sections(h, p2.zero_cone());
  CHECK(z.hilbert_basis.size() == 4);
  CHECK(z.module_generators == std::vector<IntVec>{iv({0, 0})});

  // Non-smooth cone: dual of cone((1,0),(1,2)) has Hilbert basis (0,1),(1,0),(2,-1).
  Fan f = Fan::from_cones(2, {{iv({1, 0}), iv({1, 2})}});
  LocalSections s = local_sections(ToricDivisor::zero(f), 3);
  CHECK(s.hilbert_basis == std::vector<IntVec>{iv({0, 1}), iv({1, 0}), iv({2, -1})});
  LocalSections nc = local_sections(ToricDivisor::prime(f, *f.ray_index(iv({1, 0}))), 3);
  CHECK_FALSE(nc.shift.has_value());
  CHECK(nc.module_generators.size() == 2);
}

TEST_CASE("div_char") {
  Fan p2 = p2_fan();
  CHECK(div_char(iv({1, 0}), p2) == prime_at(p2, iv({1, 0})) - prime_at(p2, iv({-1, -1})));
  CHECK(div_char(iv({0, 0}), p2) == ToricDivisor::zero(p2));
  Fan pl = plane_fan();
  ToricDivisor d = div_char(iv({1, 0, 0}), pl);
  CHECK(d.coeffs[pl.require_ray(iv({1, 0, 1}))] == 1);
  CHECK(d.coeffs[pl.require_ray(iv({0, 1, 1}))] == 0);
  CHECK(d.coeffs[pl.require_ray(iv({-1, 0, -1}))] == -1);
  CHECK(d.coeffs[pl.require_ray(iv({0, -1, -1}))] == 0);
}

TEST_CASE("intersect_curve") {
  Fan p2 = p2_fan();
  ToricDivisor h = prime_at(p2, iv({-1, -1}));
  for (std::size_t r = 0; r < 3; ++r) CHECK(intersect_curve(h, p2.cone_id({r})) == 1);
  CHECK_THROWS_AS(intersect_curve(h, p2.zero_cone()), Error);

  Fan f1 = f1_fan();
  ToricDivisor e = prime_at(f1, iv({1, 1}));
  CHECK(intersect_curve(e, cone_of(f1, {iv({1, 1})})) == -1);
  CHECK(intersect_curve(e, cone_of(f1, {iv({1, 0})})) == 1);
  CHECK(intersect_curve(e, cone_of(f1, {iv({0, 1})})) == 1);
  CHECK(intersect_curve(e, cone_of(f1, {iv({-1, -1})})) == 0);

  ToricDivisor pr = div_char(iv({3, -2}), f1);
  for (auto w : walls(f1)) CHECK(intersect_curve(pr, w) == 0);
}

TEST_CASE("principal and numerically trivial") {
  Fan p2 = p2_fan();
  ToricDivisor d = prime_at(p2, iv({1, 0})) - prime_at(p2, iv({-1, -1}));
  CHECK(is_principal(d) == iv({1, 0}));
  CHECK(numerically_trivial(d));
  ToricDivisor h = prime_at(p2, iv({-1, -1}));
  CHECK_FALSE(is_principal(h).has_value());
  CHECK_FALSE(numerically_trivial(h));
  CHECK(is_principal(ToricDivisor::zero(p2)) == iv({0, 0}));
  CHECK(numerically_trivial(ToricDivisor::zero(p2)));
}

TEST_CASE("pullback") {
  Fan p2 = p2_fan();
  Subdivision s = star_subdivide(p2, cone_of(p2, {iv({1, 0}), iv({0, 1})}));
  ToricDivisor h = prime_at(p2, iv({-1, -1}));
  ToricDivisor ph = pullback(h, s.fan);
  CHECK(ph.coeffs[s.new_ray] == 0);
  CHECK(ph.coeffs[s.fan.require_ray(iv({-1, -1}))] == 1);
  ToricDivisor pe = pullback(prime_at(p2, iv({1, 0})), s.fan);
  CHECK(pe.coeffs[s.new_ray] == 1);
  IntVec m = iv({2, 5});
  CHECK(pullback(div_char(m, p2), s.fan) == div_char(m, s.fan));
  CHECK_THROWS_AS(pullback(h, p1p1_fan()), Error);

  // Functoriality along a tower.
  Subdivision s2 = star_subdivide(s.fan, cone_of(s.fan, {iv({1, 1}), iv({0, 1})}));
  CHECK(pullback(pullback(h, s.fan), s2.fan) == pullback(h, s2.fan));
}

TEST_CASE("support_function") {
  Fan p2 = p2_fan();
  PLFunction f = support_function(prime_at(p2, iv({-1, -1})));
  CHECK(f.values()[p2.require_ray(iv({-1, -1}))] == -1);
  CHECK(f.eval(rv({2, 3})) == Rat(0));
  CHECK(f.eval(rv({-2, 1})) == Rat(-2));
  Fan pl = plane_fan();
  PLFunction g = support_function(prime_at(pl, iv({1, 0, 1})));
  CHECK(g.values()[pl.require_ray(iv({1, 0, 1}))] == -1);
  CHECK(g.eval(rv({1, 1, 1})) == std::nullopt);
}
