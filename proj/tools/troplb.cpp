// troplb command-line tool: reads documents from files or standard input
// ("-"), writes one document to standard output or --output.
//
// Exit codes: 0 success, 2 schema or usage error, 3 precondition violation,
// 4 infeasible system.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include "troplb/b_divisors.hpp"
#include "troplb/error.hpp"
#include "troplb/fan_ops.hpp"
#include "troplb/io.hpp"
#include "troplb/minkowski_weights.hpp"
#include "troplb/toric_divisors.hpp"
#include "troplb/trop_hypersurface.hpp"
#include "troplb/trop_line_bundles.hpp"

using namespace troplb;
using io::Document;
using io::Json;

namespace {

std::string read_text(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SchemaError("", "cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  return text;
}

Document load(const std::string& path) {
  std::string text = read_text(path);
  try {
    return io::parse_document(text);
  } catch (const SchemaError& e) {
    throw SchemaError(e.path(), path + ": " + e.detail());
  }
}

std::size_t cone_arg(const Fan& fan, const std::vector<std::size_t>& rays, const char* flag) {
  return io::cone_from_indices(fan, rays, flag);
}

// c = 1 on the maximal cones of a pure fan, or the weight read from a document.
MinkowskiWeight weight_arg(const std::string& fan_path, const std::string& weight_path) {
  if (!weight_path.empty()) return io::read_weight(load(weight_path));
  Fan f = io::read_fan(load(fan_path));
  if (!f.is_pure()) throw Error(ErrorCode::DimensionMismatch, "--fan must be pure to carry the constant weight");
  return MinkowskiWeight::constant(f, f.ambient_dim() - f.dim(), 1);
}

Json vectors(const std::vector<IntVec>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(io::int_vec_json(v));
  return a;
}

Json rat_vectors(const std::vector<RatVec>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(io::rat_vec_json(v));
  return a;
}

Json cones(const Fan& fan, const std::vector<std::size_t>& ids) {
  Json a = Json::array();
  for (auto id : ids) a.push_back(io::cone_json(fan, id));
  return a;
}

int exit_code(const Error& e) {
  switch (e.code()) {
    case ErrorCode::Schema: return 2;
    case ErrorCode::Infeasible: return 4;
    default: return 3;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tropical line bundles, Minkowski weights and toric b-divisors."};
  app.require_subcommand(1);
  app.fallthrough();
  std::string output;
  app.add_option("-o,--output", output, "Write the result document to this file");

  std::function<Document()> action;
  std::function<std::string()> text_action;
  auto bind = [&](CLI::App* cmd, std::function<Document()> f) { cmd->callback([&action, f] { action = f; }); };

  std::string any_path;
  auto* fmt = app.add_subcommand("format", "Print a document in canonical form");
  fmt->add_option("document", any_path, "any document")->required();
  fmt->callback([&] { text_action = [&] { return io::canonicalize(read_text(any_path)); }; });

  // tropicalize
  std::string support_path;
  bool unimodular = false;
  auto* trop = app.add_subcommand("tropicalize", "Weighted normal-fan skeleton of a Laurent support");
  trop->add_option("support", support_path, "laurent_support document")->required();
  trop->add_flag("--unimodularize", unimodular, "Refine the result to a unimodular fan");
  bind(trop, [&] {
    TropicalizeOptions opts;
    opts.unimodularize = unimodular;
    return io::to_document(tropicalize(io::read_laurent_support(load(support_path)), opts));
  });

  // fan
  auto* fan_cmd = app.add_subcommand("fan", "Fan operations");
  fan_cmd->require_subcommand(1);
  std::string fan_path;
  std::vector<std::size_t> cone_rays;

  auto* fan_check = fan_cmd->add_subcommand("check", "Validate a fan and report its properties");
  fan_check->add_option("fan", fan_path, "fan document")->required();
  bind(fan_check, [&] {
    Fan f = io::read_fan(load(fan_path));
    UnimodularityReport u = is_unimodular(f);
    Json p = Json::object();
    p["valid"] = true;
    p["ambient_dim"] = f.ambient_dim();
    p["dim"] = f.dim();
    p["num_rays"] = f.num_rays();
    p["num_cones"] = f.num_cones();
    p["pure"] = f.is_pure();
    p["simplicial"] = f.is_simplicial();
    p["complete"] = f.is_complete();
    p["unimodular"] = u.unimodular;
    p["offenders"] = cones(f, u.offenders);
    return io::report(p);
  });

  auto* fan_sub = fan_cmd->add_subcommand("subdivide", "Star subdivision at a cone");
  fan_sub->add_option("fan", fan_path, "fan document")->required();
  fan_sub->add_option("--cone", cone_rays, "Ray indices of the cone")->required();
  bind(fan_sub, [&] {
    Fan f = io::read_fan(load(fan_path));
    return io::to_document(star_subdivide(f, cone_arg(f, cone_rays, "--cone")).fan);
  });

  auto* fan_uni = fan_cmd->add_subcommand("unimodularize", "Refine to a unimodular fan");
  fan_uni->add_option("fan", fan_path, "fan document")->required();
  bind(fan_uni, [&] { return io::to_document(unimodularize(io::read_fan(load(fan_path)))); });

  std::string complex_path;
  auto* fan_cone = fan_cmd->add_subcommand("cone-over", "Fan over a rational polyhedral complex");
  fan_cone->add_option("complex", complex_path, "rational_complex document")->required();
  bind(fan_cone, [&] { return io::to_document(cone_over_complex(io::read_rational_complex(load(complex_path)))); });

  // weight
  auto* weight_cmd = app.add_subcommand("weight", "Minkowski weight operations");
  weight_cmd->require_subcommand(1);
  std::string weight_path, function_path, divisor_path;

  auto* w_bal = weight_cmd->add_subcommand("balance", "Check the balancing condition");
  w_bal->add_option("weight", weight_path, "weighted_fan document")->required();
  bind(w_bal, [&] {
    MinkowskiWeight c = io::read_weight(load(weight_path));
    BalanceReport r = is_balanced(c);
    Json p = Json::object();
    p["balanced"] = r.balanced;
    p["failing"] = cones(c.fan(), r.failing);
    return io::report(p);
  });

  auto* w_sup = weight_cmd->add_subcommand("support", "Weight restricted to its support fan");
  w_sup->add_option("weight", weight_path, "weighted_fan document")->required();
  bind(w_sup, [&] { return io::to_document(restrict_to_support(io::read_weight(load(weight_path)))); });

  auto* w_kap = weight_cmd->add_subcommand("kappa", "Intersect with a piecewise-linear function");
  w_kap->add_option("weight", weight_path, "weighted_fan document")->required();
  auto* kap_f = w_kap->add_option("--function", function_path, "pl_function document");
  auto* kap_d = w_kap->add_option("--divisor", divisor_path, "Cartier divisor document");
  kap_f->excludes(kap_d);
  bind(w_kap, [&] {
    MinkowskiWeight c = io::read_weight(load(weight_path));
    if (function_path.empty() && divisor_path.empty())
      throw SchemaError("--function", "one of --function or --divisor is required");
    PLFunction f = function_path.empty() ? support_function(io::read_divisor(load(divisor_path)))
                                         : io::read_pl_function(load(function_path));
    return io::to_document(kappa(c, f));
  });

  // divisor
  auto* div_cmd = app.add_subcommand("divisor", "Toric divisor operations");
  div_cmd->require_subcommand(1);
  std::string fine_path;

  auto* d_cart = div_cmd->add_subcommand("cartier", "Cartier data, or the failing cone");
  d_cart->add_option("divisor", divisor_path, "divisor document")->required();
  bind(d_cart, [&] {
    ToricDivisor d = io::read_divisor(load(divisor_path));
    Json p = Json::object();
    try {
      CartierData cd = cartier_data(d);
      p["cartier"] = true;
      Json chars = Json::array();
      for (const auto& [id, m] : cd.m) chars.push_back(Json{{"cone", io::cone_json(d.fan, id)}, {"m", io::int_vec_json(m)}});
      p["characters"] = chars;
    } catch (const NotCartierError& e) {
      p["cartier"] = false;
      Json c = Json::array();
      for (auto r : e.cone()) c.push_back(r);
      p["cone"] = c;
      if (e.rational_solution()) p["rational_solution"] = io::rat_vec_json(*e.rational_solution());
    }
    return io::report(p);
  });

  auto* d_poly = div_cmd->add_subcommand("polytope", "The polyhedron P_D");
  d_poly->add_option("divisor", divisor_path, "divisor document")->required();
  bind(d_poly, [&] {
    LatticePolytope poly = polytope(io::read_divisor(load(divisor_path)));
    Json p = Json::object();
    p["empty"] = poly.is_empty();
    p["dim"] = poly.dim();
    p["bounded"] = poly.is_bounded();
    p["vertices"] = rat_vectors(poly.vertices());
    p["rays"] = vectors(poly.rays());
    p["lineality"] = vectors(poly.lineality());
    if (poly.is_bounded()) p["lattice_points"] = vectors(poly.lattice_points());
    return io::report(p);
  });

  auto* d_sec = div_cmd->add_subcommand("sections", "Local sections over one cone");
  d_sec->add_option("divisor", divisor_path, "divisor document")->required();
  d_sec->add_option("--cone", cone_rays, "Ray indices of the cone")->required();
  bind(d_sec, [&] {
    ToricDivisor d = io::read_divisor(load(divisor_path));
    LocalSections s = local_sections(d, cone_arg(d.fan, cone_rays, "--cone"));
    Json p = Json::object();
    p["inequalities"] = rat_vectors(s.inequalities);
    p["rhs"] = io::rat_vec_json(s.rhs);
    if (s.shift) p["shift"] = io::int_vec_json(*s.shift);
    p["hilbert_basis"] = vectors(s.hilbert_basis);
    p["module_generators"] = vectors(s.module_generators);
    return io::report(p);
  });

  auto* d_prin = div_cmd->add_subcommand("principal", "Decide D = div(chi^m)");
  d_prin->add_option("divisor", divisor_path, "divisor document")->required();
  bind(d_prin, [&] {
    auto m = is_principal(io::read_divisor(load(divisor_path)));
    Json p = Json::object();
    p["principal"] = m.has_value();
    if (m) p["witness"] = io::int_vec_json(*m);
    return io::report(p);
  });

  auto* d_pull = div_cmd->add_subcommand("pullback", "Pull a Cartier divisor back to a refinement");
  d_pull->add_option("divisor", divisor_path, "divisor document")->required();
  d_pull->add_option("--fine", fine_path, "Refining fan document")->required();
  bind(d_pull, [&] {
    ToricDivisor d = io::read_divisor(load(divisor_path));
    return io::to_document(pullback(d, io::read_fan(load(fine_path))));
  });

  auto* d_int = div_cmd->add_subcommand("intersect", "Intersection numbers with invariant curves");
  d_int->add_option("divisor", divisor_path, "divisor document")->required();
  d_int->add_option("--wall", cone_rays, "Ray indices of one wall (default: all walls)");
  bind(d_int, [&] {
    ToricDivisor d = io::read_divisor(load(divisor_path));
    std::vector<std::size_t> ws;
    if (!cone_rays.empty()) {
      ws.push_back(cone_arg(d.fan, cone_rays, "--wall"));
    } else {
      for (auto t : walls(d.fan))
        if (d.fan.cone(t).dim + 1 == d.fan.dim()) ws.push_back(t);
    }
    CartierData cd = cartier_data(d);
    Json rows = Json::array();
    for (auto t : ws) rows.push_back(Json{{"wall", io::cone_json(d.fan, t)}, {"value", io::int_json(intersect_curve(d, cd, t))}});
    Json p = Json::object();
    p["intersections"] = rows;
    return io::report(p);
  });

  // troplb
  auto* tl_cmd = app.add_subcommand("troplb", "Tropical line bundles on a weighted fan");
  tl_cmd->require_subcommand(1);
  auto add_cycle = [&](CLI::App* cmd) {
    auto* f = cmd->add_option("--fan", fan_path, "Pure fan, taken with weight 1");
    auto* w = cmd->add_option("--weight", weight_path, "weighted_fan document");
    f->excludes(w);
    cmd->add_option("--divisor", divisor_path, "Cartier divisor document")->required();
  };
  auto need_cycle = [&] {
    if (fan_path.empty() && weight_path.empty()) throw SchemaError("--fan", "one of --fan or --weight is required");
  };

  auto* tl_w = tl_cmd->add_subcommand("weights", "Strata weights kappa(c, phi_D)");
  add_cycle(tl_w);
  bind(tl_w, [&] {
    need_cycle();
    MinkowskiWeight c = weight_arg(fan_path, weight_path);
    return io::to_document(weights_from_divisor(c, io::read_divisor(load(divisor_path))));
  });

  std::string strata_path;
  auto* tl_s = tl_cmd->add_subcommand("solve", "Recover a divisor from strata weights");
  tl_s->add_option("weights", strata_path, "strata_weights document")->required();
  bind(tl_s, [&] {
    DivisorSolution s = divisor_from_weights(io::read_strata_weights(load(strata_path)));
    Json p = Json::object();
    p["representative"] = io::to_document(s.representative).payload;
    p["homogeneous_basis"] = vectors(s.homogeneous_basis);
    Json rays = Json::array();
    for (auto r : s.support_rays) rays.push_back(r);
    p["support_rays"] = rays;
    p["kernel_rank"] = s.kernel_rank;
    p["principal_rank"] = s.principal_rank;
    p["quotient_rank"] = s.quotient_rank;
    p["underdetermined"] = s.underdetermined;
    return io::report(p);
  });

  auto* tl_b = tl_cmd->add_subcommand("blowup-check", "Strata weights before and after a star subdivision");
  add_cycle(tl_b);
  tl_b->add_option("--cone", cone_rays, "Ray indices of the cone to subdivide")->required();
  bind(tl_b, [&] {
    need_cycle();
    MinkowskiWeight c = weight_arg(fan_path, weight_path);
    ToricDivisor d = io::read_divisor(load(divisor_path));
    BlowupReport r = blowup_compatibility(c, d, cone_arg(c.fan(), cone_rays, "--cone"));
    const Fan& fine = r.subdivision.fan;
    Json rows = Json::array();
    for (const auto& row : r.rows) {
      Json j = Json::object();
      j["wall"] = io::cone_json(fine, row.wall);
      j["home"] = io::cone_json(c.fan(), row.home);
      j["exceptional"] = row.exceptional;
      j["expected"] = io::int_json(row.expected);
      j["actual"] = io::int_json(row.actual);
      rows.push_back(j);
    }
    Json p = Json::object();
    p["ok"] = r.ok();
    p["old_walls_preserved"] = r.old_walls_preserved;
    p["exceptional_zero"] = r.exceptional_zero;
    p["new_ray"] = r.subdivision.new_ray;
    p["fan"] = io::to_document(fine).payload;
    p["rows"] = rows;
    return io::report(p);
  });

  // bdiv
  auto* bd_cmd = app.add_subcommand("bdiv", "Toric b-divisors");
  bd_cmd->require_subcommand(1);
  std::string bdiv_path, model_path;

  auto* bd_z = bd_cmd->add_subcommand("zideal", "Z(a) of a monomial ideal given by its generators");
  bd_z->add_option("ideal", support_path, "laurent_support document listing the generators")->required();
  bd_z->add_option("--fan", fan_path, "Base fan document")->required();
  bind(bd_z, [&] {
    LaurentSupport gens = io::read_laurent_support(load(support_path));
    return io::to_document(z_of_ideal(MonomialIdeal(gens.ambient_dim, gens.exponents), io::read_fan(load(fan_path))));
  });

  auto* bd_env = bd_cmd->add_subcommand("envelope", "Nef envelope of a divisor");
  bd_env->add_option("divisor", divisor_path, "divisor document")->required();
  bind(bd_env, [&] { return io::to_document(nef_envelope(io::read_divisor(load(divisor_path)))); });

  auto* bd_nef = bd_cmd->add_subcommand("nef", "Nefness of a Cartier b-divisor");
  bd_nef->add_option("bdivisor", bdiv_path, "bdivisor document")->required();
  bind(bd_nef, [&] {
    CartierBDivisor b = io::read_bdivisor(load(bdiv_path));
    Json p = Json::object();
    p["relatively_nef"] = is_relatively_nef(b);
    p["nef"] = is_nef(b);
    return io::report(p);
  });

  auto* bd_push = bd_cmd->add_subcommand("push", "Push forward to a model");
  bd_push->add_option("bdivisor", bdiv_path, "bdivisor document")->required();
  bd_push->add_option("--model", model_path, "Model fan document")->required();
  bind(bd_push, [&] {
    return io::to_document(push_forward(io::read_bdivisor(load(bdiv_path)), io::read_fan(load(model_path))));
  });

  auto* bd_pull = bd_cmd->add_subcommand("pull", "Cartier b-divisor of a divisor, on a model");
  bd_pull->add_option("divisor", divisor_path, "divisor document")->required();
  bd_pull->add_option("--model", model_path, "Model fan document (default: the divisor's fan)");
  bind(bd_pull, [&] {
    ToricDivisor d = io::read_divisor(load(divisor_path));
    Fan model = model_path.empty() ? d.fan : io::read_fan(load(model_path));
    return io::to_document(pull_back(d, model));
  });

  auto* bd_det = bd_cmd->add_subcommand("determined", "Is the b-divisor determined on a model");
  bd_det->add_option("bdivisor", bdiv_path, "bdivisor document")->required();
  bd_det->add_option("--model", model_path, "Model fan document")->required();
  bind(bd_det, [&] {
    Json p = Json::object();
    p["determined"] = determined_on(io::read_bdivisor(load(bdiv_path)), io::read_fan(load(model_path)));
    return io::report(p);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << io::print_document(io::error_document(SchemaError("", std::string("usage: ") + e.what())));
    return 2;
  }

  try {
    std::string text = text_action ? text_action() : io::print_document(action());
    if (output.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(output, std::ios::binary);
      if (!out) throw SchemaError("--output", "cannot write " + output);
      out << text;
    }
    return 0;
  } catch (const Error& e) {
    std::cerr << io::print_document(io::error_document(e));
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << io::print_document(io::error_document(Error(ErrorCode::Schema, e.what())));
    return 2;
  }
}
