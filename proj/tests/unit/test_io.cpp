#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <string>

#include "support.hpp"
#include "troplb/error.hpp"
#include "troplb/io.hpp"
#include "troplb/trop_hypersurface.hpp"

using namespace troplb;
using namespace test_support;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string schema_path(const std::string& text) {
  try {
    io::Document d = io::parse_document(text);
    io::canonicalize(text);
  } catch (const SchemaError& e) {
    return e.path();
  }
  return "<accepted>";
}

std::string fan_doc(const std::string& rays, const std::string& cones) {
  return R"({"schema": "troplb/1", "kind": "fan", "payload": {"ambient_dim": 2, "rays": )" + rays +
         R"(, "cones": )" + cones + "}}";
}

}  // namespace

TEST_CASE("integers and rationals") {
  Int big("123456789012345678901234567890");
  CHECK(io::int_json(big).is_string());
  CHECK(io::parse_int(io::int_json(big), "x") == big);
  CHECK(io::int_json(Int(-7)) == io::Json(-7));
  CHECK(io::rat_json(Rat(6, 4)) == io::Json("3/2"));
  CHECK(io::rat_json(Rat(4, 2)) == io::Json(2));
  CHECK(io::parse_rat(io::Json("-6/4"), "x") == Rat(-3, 2));
  CHECK_THROWS_AS(io::parse_int(io::Json(1.5), "x"), SchemaError);
  CHECK_THROWS_AS(io::parse_rat(io::Json("1/0"), "x"), SchemaError);
  CHECK_THROWS_AS(io::parse_rat(io::Json("1/-2"), "x"), SchemaError);
}

TEST_CASE("Example 0 fan document") {
  Fan f = io::read_fan(io::parse_document(slurp(fs::path(TROPLB_GOLDEN) / "ex0_tropicalize.json")));
  CHECK(f.num_rays() == 4);
  CHECK(f.cones_of_dim(2).size() == 6);
  CHECK(f.cones_of_dim(3).empty());
}

TEST_CASE("schema errors carry field paths") {
  CHECK(schema_path(fan_doc("[[1, 0], [0, 1], [1, 0]]", "[[0, 1]]")) == "payload.rays[2]");
  CHECK(schema_path(fan_doc("[[2, 0], [0, 1]]", "[[0, 1]]")) == "payload.rays[0]");
  CHECK(schema_path(fan_doc("[[1, 0], [0, 1]]", "[[0, 5]]")) == "payload.cones[0][1]");
  CHECK(schema_path(fan_doc("[[1, 0], [0]]", "[[0, 1]]")) == "payload.rays[1]");
  CHECK(schema_path(fan_doc("[[1, 0], [0, 1]]", "[[0, 0]]")) == "payload.cones[0]");
  CHECK(schema_path(fan_doc("[[1, 0.5], [0, 1]]", "[[0, 1]]")) == "payload.rays[0][1]");
  CHECK(schema_path(R"({"schema": "troplb/2", "kind": "fan", "payload": {}})") == "schema");
  CHECK(schema_path(R"({"schema": "troplb/1", "kind": "cake", "payload": {}})") == "kind");
  CHECK(schema_path(R"({"schema": "troplb/1", "kind": "fan", "payload": {}, "x": 1})") == "x");
  CHECK(schema_path("{not json") == "");
  CHECK(schema_path(fan_doc("[[1, 0], [0, 1]]", "[[0, 1]]")) == "<accepted>");
}

TEST_CASE("non-canonical ray order is renumbered consistently") {
  std::string text = R"({"schema": "troplb/1", "kind": "divisor", "payload": {"fan": {"ambient_dim": 2,
    "rays": [[1, 0], [0, 1], [-1, -1]], "cones": [[1, 0], [2, 1], [0, 2]], "complete": true},
    "coefficients": [1, 2, 3]}})";
  ToricDivisor d = io::read_divisor(io::parse_document(text));
  CHECK(d.coeffs[d.fan.require_ray(iv({1, 0}))] == 1);
  CHECK(d.coeffs[d.fan.require_ray(iv({0, 1}))] == 2);
  CHECK(d.coeffs[d.fan.require_ray(iv({-1, -1}))] == 3);
  std::string canon = io::canonicalize(text);
  CHECK(io::canonicalize(canon) == canon);
  CHECK(io::read_divisor(io::parse_document(canon)) == d);
}

TEST_CASE("weights survive print and parse") {
  LaurentSupport f(3, {iv({0, 0, 0}), iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})});
  WeightedFan w = tropicalize(f);
  std::string text = io::print_document(io::to_document(w));
  CHECK(io::read_weight(io::parse_document(text)) == w);
  CHECK(io::read_fan(io::parse_document(text)) == w.fan());
}

TEST_CASE("random divisors and PL functions round trip") {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(-1000000, 1000000);
  Fan fans[] = {p2_fan(), p1p1_fan(), plane_fan(), ex0_fan()};
  for (int trial = 0; trial < 50; ++trial) {
    const Fan& f = fans[trial % 4];
    IntVec c;
    RatVec v;
    for (std::size_t i = 0; i < f.num_rays(); ++i) {
      c.push_back(Int(coef(rng)) * Int("1000000000000000"));
      v.push_back(Rat(coef(rng), coef(rng) % 97 + 98));
    }
    ToricDivisor d(f, c);
    std::string td = io::print_document(io::to_document(d));
    CHECK(io::read_divisor(io::parse_document(td)) == d);
    CHECK(io::canonicalize(td) == td);
    for (auto& x : v) x.canonicalize();
    PLFunction phi(f, v);
    std::string tp = io::print_document(io::to_document(phi));
    CHECK(io::read_pl_function(io::parse_document(tp)) == phi);
  }
}

TEST_CASE("fractional divisor is rejected where an integral one is needed") {
  QDivisor q{p2_fan(), {Rat(1, 2), Rat(0), Rat(0)}};
  io::Document doc = io::to_document(q);
  CHECK(io::read_qdivisor(doc) == q);
  CHECK_THROWS_AS(io::read_divisor(doc), Error);
}

TEST_CASE("error documents") {
  NotCartierError e({0, 1}, RatVec{Rat(-1), Rat(1, 2)}, "not Cartier");
  io::Json p = io::error_document(e).payload;
  CHECK(p["code"] == "NotCartier");
  CHECK(p["cone"] == io::Json::array({0, 1}));
  CHECK(p["rational_solution"] == io::Json::array({-1, "1/2"}));
}

TEST_CASE("printer inlines short containers and breaks long ones") {
  io::Json j = io::Json::object();
  j["a"] = io::Json::array({1, 2, 3});
  CHECK(io::print_json(j) == "{\"a\": [1, 2, 3]}\n");
  io::Json wide = io::Json::array();
  for (int i = 0; i < 40; ++i) wide.push_back(i);
  std::string out = io::print_json(wide);
  CHECK(out.substr(0, 2) == "[\n");
  CHECK(out.find("\n  0,\n") != std::string::npos);
}

TEST_CASE("every stored fixture and golden is canonical") {
  int n = 0;
  for (const char* dir : {TROPLB_FIXTURES, TROPLB_GOLDEN}) {
    for (const auto& e : fs::directory_iterator(dir)) {
      if (e.path().extension() != ".json") continue;
      std::string text = slurp(e.path());
      INFO(e.path().string());
      CHECK(io::canonicalize(text) == text);
      ++n;
    }
  }
  CHECK(n > 30);
}
