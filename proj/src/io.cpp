#include "troplb/io.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <set>

namespace troplb::io {

namespace {

constexpr std::size_t kWidth = 80;

const std::set<std::string> kKinds = {"fan",         "weighted_fan",   "divisor", "pl_function",
                                      "strata_weights", "bdivisor",   "laurent_support",
                                      "rational_complex", "report",   "error"};

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }
std::string dot_key(const std::string& path, const char* key) {
  return path.empty() ? std::string(key) : path + "." + key;
}

void require_object(const Json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
}

const Json& require_array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  return j;
}

void check_keys(const Json& obj, std::initializer_list<const char*> allowed, const std::string& path) {
  require_object(obj, path);
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || it.key() == a;
    if (!ok) throw SchemaError(dot_key(path, it.key().c_str()), "unknown field");
  }
}

const Json& field(const Json& obj, const char* key, const std::string& path) {
  require_object(obj, path);
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(dot_key(path, key), "missing field");
  return *it;
}

std::size_t parse_index(const Json& j, const std::string& path) {
  Int x = parse_int(j, path);
  if (x < 0 || !x.fits_ulong_p()) throw SchemaError(path, "expected a non-negative index");
  return x.get_ui();
}

IntVec parse_int_vec(const Json& j, std::size_t n, const std::string& path) {
  require_array(j, path);
  if (j.size() != n) throw SchemaError(path, "expected " + std::to_string(n) + " entries");
  IntVec v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(parse_int(j[i], at(path, i)));
  return v;
}

RatVec parse_rat_vec(const Json& j, std::size_t n, const std::string& path) {
  require_array(j, path);
  if (j.size() != n) throw SchemaError(path, "expected " + std::to_string(n) + " entries");
  RatVec v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(parse_rat(j[i], at(path, i)));
  return v;
}

bool is_decimal(const std::string& s, std::size_t from = 0) {
  if (s.size() > from && s[from] == '-') ++from;
  if (s.size() == from) return false;
  return std::all_of(s.begin() + from, s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

// Flat rendering with ", " and ": " separators.
void flat(const Json& j, std::string& out) {
  if (j.is_array()) {
    out += '[';
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ", ";
      flat(j[i], out);
    }
    out += ']';
  } else if (j.is_object()) {
    out += '{';
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out += ", ";
      first = false;
      out += Json(it.key()).dump();
      out += ": ";
      flat(it.value(), out);
    }
    out += '}';
  } else {
    out += j.dump(-1, ' ', false, Json::error_handler_t::replace);
  }
}

void emit(const Json& j, std::size_t indent, std::size_t used, std::string& out) {
  std::string f;
  flat(j, f);
  if (!j.is_structured() || j.empty() || used + f.size() + 1 <= kWidth) {
    out += f;
    return;
  }
  const std::string pad(indent + 2, ' ');
  const bool obj = j.is_object();
  out += obj ? "{\n" : "[\n";
  std::size_t i = 0;
  for (auto it = j.begin(); it != j.end(); ++it, ++i) {
    if (i) out += ",\n";
    out += pad;
    std::size_t prefix = pad.size();
    if (obj) {
      std::string k = Json(it.key()).dump() + ": ";
      out += k;
      prefix += k.size();
    }
    emit(it.value(), indent + 2, prefix, out);
  }
  out += '\n';
  out += std::string(indent, ' ');
  out += obj ? '}' : ']';
}

struct DecodedFan {
  Fan fan;
  std::vector<std::size_t> index;  // document ray index -> fan ray index
};

Json fan_payload(const Fan& f) {
  Json p = Json::object();
  p["ambient_dim"] = f.ambient_dim();
  Json rays = Json::array();
  for (const auto& r : f.rays()) rays.push_back(int_vec_json(r));
  p["rays"] = rays;
  Json cones = Json::array();
  for (auto id : f.maximal_cones()) cones.push_back(cone_json(f, id));
  p["cones"] = cones;
  if (f.declared_complete()) p["complete"] = true;
  return p;
}

DecodedFan decode_fan(const Json& p, const std::string& path) {
  check_keys(p, {"ambient_dim", "rays", "cones", "complete"}, path);
  const std::size_t n = parse_index(field(p, "ambient_dim", path), dot_key(path, "ambient_dim"));
  const std::string rpath = dot_key(path, "rays");
  const Json& jr = require_array(field(p, "rays", path), rpath);
  std::vector<IntVec> rays;
  std::map<IntVec, std::size_t> seen;
  for (std::size_t i = 0; i < jr.size(); ++i) {
    IntVec r = parse_int_vec(jr[i], n, at(rpath, i));
    if (is_zero(r)) throw SchemaError(at(rpath, i), "zero ray");
    if (content(r) != 1) throw SchemaError(at(rpath, i), "ray is not primitive");
    if (!seen.emplace(r, i).second)
      throw SchemaError(at(rpath, i), "duplicate ray (same as rays[" + std::to_string(seen[r]) + "])");
    rays.push_back(r);
  }
  const std::string cpath = dot_key(path, "cones");
  const Json& jc = require_array(field(p, "cones", path), cpath);
  std::vector<RaySet> cones;
  for (std::size_t i = 0; i < jc.size(); ++i) {
    require_array(jc[i], at(cpath, i));
    RaySet s;
    for (std::size_t k = 0; k < jc[i].size(); ++k) {
      std::size_t r = parse_index(jc[i][k], at(at(cpath, i), k));
      if (r >= rays.size()) throw SchemaError(at(at(cpath, i), k), "ray index out of range");
      s.push_back(r);
    }
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw SchemaError(at(cpath, i), "repeated ray index");
    cones.push_back(s);
  }
  bool complete = false;
  if (p.contains("complete")) {
    if (!p["complete"].is_boolean()) throw SchemaError(dot_key(path, "complete"), "expected a boolean");
    complete = p["complete"].get<bool>();
  }
  DecodedFan out{Fan(n, rays, cones, complete), {}};
  for (const auto& r : rays) out.index.push_back(out.fan.require_ray(r));
  return out;
}

std::size_t decode_cone(const DecodedFan& df, const Json& j, const std::string& path) {
  require_array(j, path);
  std::vector<std::size_t> rays;
  for (std::size_t k = 0; k < j.size(); ++k) {
    std::size_t r = parse_index(j[k], at(path, k));
    if (r >= df.index.size()) throw SchemaError(at(path, k), "ray index out of range");
    rays.push_back(df.index[r]);
  }
  return cone_from_indices(df.fan, rays, path);
}

template <class Vec, class Parse>
Vec decode_per_ray(const DecodedFan& df, const Json& j, const std::string& path, Parse parse) {
  require_array(j, path);
  if (j.size() != df.index.size()) throw SchemaError(path, "expected one entry per ray");
  Vec out(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) out[df.index[i]] = parse(j[i], at(path, i));
  return out;
}

Json weight_payload(const MinkowskiWeight& c) {
  Json p = Json::object();
  p["fan"] = fan_payload(c.fan());
  p["codim"] = c.codim();
  Json ws = Json::array();
  for (const auto& [id, w] : c.weights()) ws.push_back(Json{{"cone", cone_json(c.fan(), id)}, {"weight", int_json(w)}});
  p["weights"] = ws;
  return p;
}

MinkowskiWeight decode_weight(const Json& p, const std::string& path) {
  check_keys(p, {"fan", "codim", "weights"}, path);
  DecodedFan df = decode_fan(field(p, "fan", path), dot_key(path, "fan"));
  const std::size_t codim = parse_index(field(p, "codim", path), dot_key(path, "codim"));
  if (codim > df.fan.ambient_dim()) throw SchemaError(dot_key(path, "codim"), "codimension exceeds rank");
  const std::size_t dim = df.fan.ambient_dim() - codim;
  const std::string wpath = dot_key(path, "weights");
  const Json& jw = require_array(field(p, "weights", path), wpath);
  std::map<std::size_t, Int> w;
  for (std::size_t i = 0; i < jw.size(); ++i) {
    const std::string ep = at(wpath, i);
    check_keys(jw[i], {"cone", "weight"}, ep);
    std::size_t id = decode_cone(df, field(jw[i], "cone", ep), dot_key(ep, "cone"));
    if (df.fan.cone(id).dim != dim) throw SchemaError(dot_key(ep, "cone"), "cone has the wrong dimension");
    if (!w.emplace(id, parse_int(field(jw[i], "weight", ep), dot_key(ep, "weight"))).second)
      throw SchemaError(dot_key(ep, "cone"), "cone listed twice");
  }
  return MinkowskiWeight(df.fan, codim, w);
}

PLFunction decode_pl(const Json& fan_json, const Json& values, const std::string& fan_path,
                     const std::string& values_path) {
  DecodedFan df = decode_fan(fan_json, fan_path);
  RatVec v = decode_per_ray<RatVec>(df, values, values_path, parse_rat);
  return PLFunction(df.fan, v);
}

Document make(const char* kind, Json payload) { return Document{kind, std::move(payload)}; }

void expect_kind(const Document& doc, std::initializer_list<const char*> kinds) {
  for (const char* k : kinds)
    if (doc.kind == k) return;
  std::string names;
  for (const char* k : kinds) names += (names.empty() ? "" : " or ") + std::string(k);
  throw SchemaError("kind", "expected a " + names + " document, got " + doc.kind);
}

}  // namespace

Json int_json(const Int& x) {
  if (x.fits_slong_p() && std::numeric_limits<long>::digits >= 63) return Json(static_cast<std::int64_t>(x.get_si()));
  return Json(x.get_str());
}

Json rat_json(const Rat& x) {
  Rat r = x;
  r.canonicalize();
  if (r.get_den() == 1) return int_json(r.get_num());
  return Json(r.get_str());
}

Int parse_int(const Json& j, const std::string& path) {
  if (j.is_number_unsigned()) return Int(std::to_string(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return Int(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    const std::string& s = j.get_ref<const std::string&>();
    if (is_decimal(s)) return Int(s);
  }
  throw SchemaError(path, j.is_number_float() ? "expected an integer (write large integers as decimal strings)"
                                              : "expected an integer");
}

Rat parse_rat(const Json& j, const std::string& path) {
  if (j.is_string()) {
    const std::string& s = j.get_ref<const std::string&>();
    auto slash = s.find('/');
    if (slash != std::string::npos) {
      std::string p = s.substr(0, slash), q = s.substr(slash + 1);
      if (!is_decimal(p) || !is_decimal(q) || q[0] == '-') throw SchemaError(path, "expected a rational p/q");
      Int den(q);
      if (den == 0) throw SchemaError(path, "zero denominator");
      Rat r(Int(p), den);
      r.canonicalize();
      return r;
    }
  }
  return Rat(parse_int(j, path));
}

Json int_vec_json(const IntVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(int_json(x));
  return a;
}

Json rat_vec_json(const RatVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rat_json(x));
  return a;
}

Json cone_json(const Fan& fan, std::size_t id) {
  Json a = Json::array();
  for (auto r : fan.cone(id).rays) a.push_back(r);
  return a;
}

std::size_t cone_from_indices(const Fan& fan, const std::vector<std::size_t>& rays, const std::string& path) {
  RaySet s = rays;
  for (auto r : s)
    if (r >= fan.num_rays()) throw SchemaError(path, "ray index out of range");
  std::sort(s.begin(), s.end());
  auto id = fan.find_cone(s);
  if (!id) throw SchemaError(path, "not a cone of the fan");
  return *id;
}

Document parse_document(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
  check_keys(j, {"schema", "kind", "payload"}, "");
  const Json& s = field(j, "schema", "");
  if (!s.is_string() || s.get<std::string>() != kSchema)
    throw SchemaError("schema", std::string("expected \"") + kSchema + "\"");
  const Json& k = field(j, "kind", "");
  if (!k.is_string() || !kKinds.count(k.get<std::string>())) throw SchemaError("kind", "unknown document kind");
  const Json& p = field(j, "payload", "");
  require_object(p, "payload");
  return Document{k.get<std::string>(), p};
}

std::string print_json(const Json& value) {
  std::string out;
  emit(value, 0, 0, out);
  out += '\n';
  return out;
}

std::string print_document(const Document& doc) {
  Json j = Json::object();
  j["schema"] = kSchema;
  j["kind"] = doc.kind;
  j["payload"] = doc.payload;
  return print_json(j);
}

std::string canonicalize(std::string_view text) {
  Document d = parse_document(text);
  if (d.kind == "fan") return print_document(to_document(read_fan(d)));
  if (d.kind == "weighted_fan") return print_document(to_document(read_weight(d)));
  if (d.kind == "divisor") return print_document(to_document(read_qdivisor(d)));
  if (d.kind == "pl_function") return print_document(to_document(read_pl_function(d)));
  if (d.kind == "strata_weights") return print_document(to_document(read_strata_weights(d)));
  if (d.kind == "bdivisor") return print_document(to_document(read_bdivisor(d)));
  if (d.kind == "laurent_support") return print_document(to_document(read_laurent_support(d)));
  if (d.kind == "rational_complex") return print_document(to_document(read_rational_complex(d)));
  return print_document(d);
}

Document to_document(const Fan& fan) { return make("fan", fan_payload(fan)); }

Document to_document(const MinkowskiWeight& c) { return make("weighted_fan", weight_payload(c)); }

Document to_document(const ToricDivisor& d) {
  Json p = Json::object();
  p["fan"] = fan_payload(d.fan);
  p["coefficients"] = int_vec_json(d.coeffs);
  return make("divisor", p);
}

Document to_document(const QDivisor& d) {
  Json p = Json::object();
  p["fan"] = fan_payload(d.fan);
  p["coefficients"] = rat_vec_json(d.coeffs);
  return make("divisor", p);
}

Document to_document(const PLFunction& f) {
  Json p = Json::object();
  p["fan"] = fan_payload(f.fan());
  p["values"] = rat_vec_json(f.values());
  return make("pl_function", p);
}

Document to_document(const StrataWeights& w) {
  Json p = Json::object();
  p["weight"] = weight_payload(w.c);
  Json vs = Json::array();
  for (const auto& [id, x] : w.w) vs.push_back(Json{{"cone", cone_json(w.c.fan(), id)}, {"value", int_json(x)}});
  p["values"] = vs;
  return make("strata_weights", p);
}

Document to_document(const CartierBDivisor& b) {
  Json p = Json::object();
  p["base"] = fan_payload(b.base());
  p["determining_fan"] = fan_payload(b.determining_fan());
  p["values"] = rat_vec_json(b.phi().values());
  return make("bdivisor", p);
}

Document to_document(const LaurentSupport& f) {
  std::vector<std::size_t> order(f.exponents.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return f.exponents[a] < f.exponents[b]; });
  Json p = Json::object();
  p["ambient_dim"] = f.ambient_dim;
  Json e = Json::array(), c = Json::array();
  for (auto i : order) {
    e.push_back(int_vec_json(f.exponents[i]));
    if (!f.coefficients.empty()) c.push_back(f.coefficients[i]);
  }
  p["exponents"] = e;
  if (!f.coefficients.empty()) p["coefficients"] = c;
  return make("laurent_support", p);
}

Document to_document(const RationalComplex& k) {
  Json p = Json::object();
  p["ambient_dim"] = k.ambient_dim;
  Json cells = Json::array();
  for (const auto& cell : k.cells) {
    Json vs = Json::array(), rs = Json::array();
    for (const auto& v : cell.vertices) vs.push_back(rat_vec_json(v));
    for (const auto& r : cell.rays) rs.push_back(int_vec_json(r));
    Json c = Json::object();
    c["vertices"] = vs;
    if (!rs.empty()) c["rays"] = rs;
    cells.push_back(c);
  }
  p["cells"] = cells;
  return make("rational_complex", p);
}

Document report(Json payload) { return make("report", std::move(payload)); }

Document error_document(const Error& e) {
  Json p = Json::object();
  p["code"] = error_name(e.code());
  p["message"] = e.what();
  if (auto* s = dynamic_cast<const SchemaError*>(&e); s && !s->path().empty()) p["path"] = s->path();
  if (auto* nc = dynamic_cast<const NotCartierError*>(&e)) {
    Json c = Json::array();
    for (auto r : nc->cone()) c.push_back(r);
    p["cone"] = c;
    if (nc->rational_solution()) p["rational_solution"] = rat_vec_json(*nc->rational_solution());
  }
  return make("error", p);
}

Fan read_fan(const Document& doc) {
  expect_kind(doc, {"fan", "weighted_fan", "divisor", "pl_function"});
  if (doc.kind == "fan") return decode_fan(doc.payload, "payload").fan;
  return decode_fan(field(doc.payload, "fan", "payload"), "payload.fan").fan;
}

MinkowskiWeight read_weight(const Document& doc) {
  expect_kind(doc, {"weighted_fan"});
  return decode_weight(doc.payload, "payload");
}

QDivisor read_qdivisor(const Document& doc) {
  expect_kind(doc, {"divisor"});
  check_keys(doc.payload, {"fan", "coefficients"}, "payload");
  DecodedFan df = decode_fan(field(doc.payload, "fan", "payload"), "payload.fan");
  RatVec c = decode_per_ray<RatVec>(df, field(doc.payload, "coefficients", "payload"), "payload.coefficients",
                                    parse_rat);
  return QDivisor{df.fan, c};
}

ToricDivisor read_divisor(const Document& doc) {
  QDivisor q = read_qdivisor(doc);
  if (!is_integral(q.coeffs)) throw Error(ErrorCode::NonIntegralDivisor, "divisor has fractional coefficients");
  return ToricDivisor(q.fan, to_int(q.coeffs));
}

PLFunction read_pl_function(const Document& doc) {
  expect_kind(doc, {"pl_function"});
  check_keys(doc.payload, {"fan", "values"}, "payload");
  return decode_pl(field(doc.payload, "fan", "payload"), field(doc.payload, "values", "payload"), "payload.fan",
                   "payload.values");
}

StrataWeights read_strata_weights(const Document& doc) {
  expect_kind(doc, {"strata_weights"});
  check_keys(doc.payload, {"weight", "values"}, "payload");
  StrataWeights sw;
  sw.c = decode_weight(field(doc.payload, "weight", "payload"), "payload.weight");
  // Re-decode the fan to translate ray indices in the value list.
  DecodedFan df = decode_fan(field(field(doc.payload, "weight", "payload"), "fan", "payload.weight"),
                             "payload.weight.fan");
  const std::string vpath = "payload.values";
  const Json& jv = require_array(field(doc.payload, "values", "payload"), vpath);
  for (std::size_t i = 0; i < jv.size(); ++i) {
    const std::string ep = at(vpath, i);
    check_keys(jv[i], {"cone", "value"}, ep);
    std::size_t id = decode_cone(df, field(jv[i], "cone", ep), dot_key(ep, "cone"));
    if (!sw.w.emplace(id, parse_int(field(jv[i], "value", ep), dot_key(ep, "value"))).second)
      throw SchemaError(dot_key(ep, "cone"), "cone listed twice");
  }
  return sw;
}

CartierBDivisor read_bdivisor(const Document& doc) {
  expect_kind(doc, {"bdivisor"});
  check_keys(doc.payload, {"base", "determining_fan", "values"}, "payload");
  Fan base = decode_fan(field(doc.payload, "base", "payload"), "payload.base").fan;
  PLFunction phi = decode_pl(field(doc.payload, "determining_fan", "payload"), field(doc.payload, "values", "payload"),
                             "payload.determining_fan", "payload.values");
  return CartierBDivisor(base, phi);
}

LaurentSupport read_laurent_support(const Document& doc) {
  expect_kind(doc, {"laurent_support"});
  const Json& p = doc.payload;
  check_keys(p, {"ambient_dim", "exponents", "coefficients"}, "payload");
  const std::size_t n = parse_index(field(p, "ambient_dim", "payload"), "payload.ambient_dim");
  const std::string epath = "payload.exponents";
  const Json& je = require_array(field(p, "exponents", "payload"), epath);
  if (je.empty()) throw SchemaError(epath, "empty support");
  std::vector<IntVec> exps;
  std::set<IntVec> seen;
  for (std::size_t i = 0; i < je.size(); ++i) {
    exps.push_back(parse_int_vec(je[i], n, at(epath, i)));
    if (!seen.insert(exps.back()).second) throw SchemaError(at(epath, i), "duplicate exponent");
  }
  std::vector<std::string> tags;
  if (p.contains("coefficients")) {
    const Json& jc = require_array(p["coefficients"], "payload.coefficients");
    if (jc.size() != exps.size()) throw SchemaError("payload.coefficients", "expected one tag per exponent");
    for (std::size_t i = 0; i < jc.size(); ++i) {
      if (!jc[i].is_string()) throw SchemaError(at("payload.coefficients", i), "expected a string");
      tags.push_back(jc[i].get<std::string>());
    }
  }
  return LaurentSupport(n, exps, tags);
}

RationalComplex read_rational_complex(const Document& doc) {
  expect_kind(doc, {"rational_complex"});
  const Json& p = doc.payload;
  check_keys(p, {"ambient_dim", "cells"}, "payload");
  RationalComplex k;
  k.ambient_dim = parse_index(field(p, "ambient_dim", "payload"), "payload.ambient_dim");
  const Json& jc = require_array(field(p, "cells", "payload"), "payload.cells");
  for (std::size_t i = 0; i < jc.size(); ++i) {
    const std::string cp = at("payload.cells", i);
    check_keys(jc[i], {"vertices", "rays"}, cp);
    ComplexCell cell;
    const Json& jv = require_array(field(jc[i], "vertices", cp), cp + ".vertices");
    if (jv.empty()) throw SchemaError(cp + ".vertices", "a cell needs at least one vertex");
    for (std::size_t v = 0; v < jv.size(); ++v)
      cell.vertices.push_back(parse_rat_vec(jv[v], k.ambient_dim, at(cp + ".vertices", v)));
    if (jc[i].contains("rays")) {
      const Json& jr = require_array(jc[i]["rays"], cp + ".rays");
      for (std::size_t r = 0; r < jr.size(); ++r)
        cell.rays.push_back(parse_int_vec(jr[r], k.ambient_dim, at(cp + ".rays", r)));
    }
    k.cells.push_back(cell);
  }
  return k;
}

}  // namespace troplb::io
