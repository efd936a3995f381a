#include <doctest.h>

#include "support.hpp"
#include "troplb/error.hpp"
#include "troplb/fan_ops.hpp"
#include "troplb/lattice.hpp"
#include "troplb/matrix.hpp"

using namespace troplb;
using namespace test_support;

namespace {

std::size_t cone_of(const Fan& f, std::initializer_list<IntVec> gens) {
  return f.cone_id_of_generators(std::vector<IntVec>(gens));
}

// Smith-form oracle: the projection kills the sublattice and its image has full rank
// with trivial elementary divisors.
void check_quotient(const QuotientLattice& q, std::size_t n, std::size_t tau_dim) {
  CHECK(q.rank() == n - tau_dim);
  for (const auto& b : q.sublattice) CHECK(is_zero(q.project(b)));
  if (q.rank() > 0) {
    for (const auto& e : smith_diagonal(q.projection, n)) CHECK(e == 1);
  }
}

}  // namespace

TEST_CASE("primitive") {
  CHECK(primitive(iv({2, 4, 6})) == iv({1, 2, 3}));
  CHECK(primitive(iv({-3, 6})) == iv({-1, 2}));
  try {
    primitive(iv({0, 0, 0}));
    FAIL("expected ZeroVector");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroVector);
  }
}

TEST_CASE("hermite normal form is unimodular and reproduces the input") {
  IntMatrix a = {iv({2, 4, 4}), iv({-6, 6, 12}), iv({10, -4, -16})};
  HermiteForm h = hermite(a, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Int s = 0;
      for (std::size_t k = 0; k < 3; ++k) s += h.u[i][k] * a[k][j];
      CHECK(s == h.h[i][j]);
    }
  std::vector<Int> d = smith_diagonal(a, 3);
  REQUIRE(d.size() == 3);
  CHECK(d[0] == 2);
  CHECK(d[1] == 6);
  CHECK(d[2] == 12);
}

TEST_CASE("quotient_by_cone") {
  Fan f = Fan::from_cones(3, {{iv({0, 0, 1}), iv({1, 0, 0})}});
  std::size_t tau = cone_of(f, {iv({0, 0, 1})});
  QuotientLattice q = quotient_by_cone(f, tau);
  check_quotient(q, 3, 1);
  CHECK(q.project(iv({1, 0, 0})) == iv({1, 0}));
  CHECK(q.project(iv({0, 1, 0})) == iv({0, 1}));

  Fan g = Fan::from_cones(2, {{iv({1, 1})}});
  QuotientLattice q2 = quotient_by_cone(g, cone_of(g, {iv({1, 1})}));
  check_quotient(q2, 2, 1);
  IntVec img = q2.project(iv({1, 0}));
  CHECK((img == iv({1}) || img == iv({-1})));
  CHECK(q2.project(iv({0, 1})) == negate(img));

  QuotientLattice q0 = quotient_by_cone(g, g.zero_cone());
  CHECK(q0.project(iv({3, -2})) == iv({3, -2}));
}

TEST_CASE("lateral_generator") {
  Fan p2 = p2_fan();
  auto lg = lateral_generator(p2, cone_of(p2, {iv({1, 0})}), cone_of(p2, {iv({1, 0}), iv({0, 1})}));
  CHECK(lg.quotient == iv({1}));
  CHECK(lg.lift == iv({0, 1}));

  auto l0 = lateral_generator(p2, p2.zero_cone(), cone_of(p2, {iv({-1, -1})}));
  CHECK(l0.quotient == iv({-1, -1}));
  CHECK(l0.lift == iv({-1, -1}));

  Fan pl = plane_fan();
  auto lp = lateral_generator(pl, cone_of(pl, {iv({1, 0, 1})}), cone_of(pl, {iv({1, 0, 1}), iv({0, 1, 1})}));
  CHECK(lp.lift == iv({0, 1, 1}));
  QuotientLattice q = quotient_by_cone(pl, cone_of(pl, {iv({1, 0, 1})}));
  CHECK(q.project(lp.lift) == lp.quotient);

  CHECK_THROWS_AS(lateral_generator(p2, p2.zero_cone(), cone_of(p2, {iv({1, 0}), iv({0, 1})})), Error);
}

TEST_CASE("fan validation") {
  CHECK_THROWS_AS(Fan(2, {iv({1, 0}), iv({1, 0})}, {{0}, {1}}), Error);
  CHECK_THROWS_AS(Fan(2, {iv({2, 0})}, {{0}}), Error);
  // Overlapping 2-cones.
  CHECK_THROWS_AS(Fan(2, {iv({1, 0}), iv({0, 1}), iv({1, 1})}, {{0, 1}, {0, 2}}), Error);
  Fan p2 = p2_fan();
  CHECK(p2.is_complete());
  CHECK(p2.num_cones() == 7);
  CHECK(ex0_fan().num_cones() == 11);
  CHECK_FALSE(ex0_fan().is_complete());
  p2.check_axioms();
}

TEST_CASE("is_unimodular") {
  CHECK(is_unimodular(p2_fan()).unimodular);
  Fan bad = Fan::from_cones(2, {{iv({1, 0}), iv({1, 2})}});
  UnimodularityReport r = is_unimodular(bad);
  CHECK_FALSE(r.unimodular);
  REQUIRE(r.offenders.size() == 1);
  CHECK(r.elementary_divisors[0] == std::vector<Int>{1, 2});
  CHECK(is_unimodular(Fan()).unimodular);
}

TEST_CASE("star_subdivide") {
  Fan p2 = p2_fan();
  Subdivision s = star_subdivide(p2, cone_of(p2, {iv({1, 0}), iv({0, 1})}));
  CHECK_FALSE(s.unchanged);
  CHECK(s.fan.ray(s.new_ray) == iv({1, 1}));
  CHECK(s.fan.num_rays() == 4);
  CHECK(s.fan.maximal_cones().size() == 4);
  CHECK(refines(s.fan, p2));
  CHECK_FALSE(refines(p2, s.fan));
  s.fan.check_axioms();
  CHECK(s.fan.is_complete());

  Subdivision same = star_subdivide(p2, cone_of(p2, {iv({1, 0})}));
  CHECK(same.unchanged);
  CHECK(same.fan == p2);

  Fan e0 = ex0_fan();
  Subdivision s0 = star_subdivide(e0, cone_of(e0, {iv({1, 0, 0}), iv({0, 1, 0})}));
  CHECK(s0.fan.ray(s0.new_ray) == iv({1, 1, 0}));
  CHECK(s0.fan.cones_of_dim(2).size() == 7);
  CHECK(refines(s0.fan, e0));
  s0.fan.check_axioms();
}

TEST_CASE("refines") {
  CHECK(refines(p2_fan(), p2_fan()));
  CHECK_FALSE(refines(p2_fan(), p1p1_fan()));
  CHECK_FALSE(refines(p1p1_fan(), p2_fan()));
}

TEST_CASE("unimodularize") {
  Fan bad = Fan::from_cones(2, {{iv({1, 0}), iv({1, 3})}, {iv({1, 3}), iv({-2, 5})}});
  Fan good = unimodularize(bad);
  CHECK(is_unimodular(good).unimodular);
  CHECK(refines(good, bad));
  good.check_axioms();

  // Square cone in rank 3 is not simplicial.
  Fan sq = Fan::from_cones(3, {{iv({1, 0, 1}), iv({0, 1, 1}), iv({-1, 0, 1}), iv({0, -1, 1})}});
  CHECK_FALSE(sq.is_simplicial());
  Fan sq_good = unimodularize(sq);
  CHECK(sq_good.is_simplicial());
  CHECK(is_unimodular(sq_good).unimodular);
  CHECK(refines(sq_good, sq));
}

TEST_CASE("cone_over_complex") {
  RationalComplex seg{1, {{{rv({1}), rv({2})}, {}}}};
  Fan f = cone_over_complex(seg);
  CHECK(f.maximal_cones().size() == 1);
  CHECK(f.ray_index(iv({1, 1})).has_value());
  CHECK(f.ray_index(iv({2, 1})).has_value());

  RationalComplex half{1, {{{rv({2})}, {iv({1})}}}};
  Fan h = cone_over_complex(half);
  CHECK(h.find_cone({*h.ray_index(iv({1, 0})), *h.ray_index(iv({2, 1}))}).has_value());

  RationalComplex pt{1, {{{rv({0})}, {}}}};
  Fan p = cone_over_complex(pt);
  CHECK(p.rays() == std::vector<IntVec>{iv({0, 1})});

  RationalComplex overlap{1, {{{rv({0}), rv({2})}, {}}, {{rv({1}), rv({3})}, {}}}};
  CHECK_THROWS_AS(cone_over_complex(overlap), Error);
}

TEST_CASE("support_membership") {
  Fan p2 = p2_fan();
  CHECK(support_membership(p2, rv({2, 3})) == cone_of(p2, {iv({1, 0}), iv({0, 1})}));
  CHECK(support_membership(p2, rv({1, 0})) == cone_of(p2, {iv({1, 0})}));
  Fan e0 = ex0_fan();
  CHECK(support_membership(e0, rv({-1, -1, -1})) == cone_of(e0, {iv({-1, -1, -1})}));
  CHECK_FALSE(support_membership(e0, rv({1, 1, 1})).has_value());
}
