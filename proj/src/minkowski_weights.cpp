#include "troplb/minkowski_weights.hpp"

#include <algorithm>
#include <set>

#include "troplb/error.hpp"
#include "troplb/lattice.hpp"

namespace troplb {

MinkowskiWeight::MinkowskiWeight(Fan fan, std::size_t codim, std::map<std::size_t, Int> weights)
    : fan_(std::move(fan)), codim_(codim) {
  if (codim_ > fan_.ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "codimension exceeds rank");
  for (auto& [id, w] : weights) {
    if (id >= fan_.num_cones()) throw Error(ErrorCode::ConeNotInFan, "weight on unknown cone");
    if (fan_.cone(id).dim != cone_dim())
      throw Error(ErrorCode::DimensionMismatch, "weight on a cone of the wrong dimension");
    if (w != 0) weights_.emplace(id, w);
  }
}

MinkowskiWeight MinkowskiWeight::constant(const Fan& fan, std::size_t codim, const Int& value) {
  std::map<std::size_t, Int> w;
  for (auto id : fan.cones_of_dim(fan.ambient_dim() - codim)) w.emplace(id, value);
  return MinkowskiWeight(fan, codim, w);
}

Int MinkowskiWeight::at(std::size_t cone) const {
  auto it = weights_.find(cone);
  return it == weights_.end() ? Int(0) : it->second;
}

MinkowskiWeight MinkowskiWeight::operator+(const MinkowskiWeight& o) const {
  if (fan_ != o.fan_ || codim_ != o.codim_)
    throw Error(ErrorCode::DimensionMismatch, "adding weights on different fans");
  std::map<std::size_t, Int> w = weights_;
  for (const auto& [id, x] : o.weights_) w[id] += x;
  return MinkowskiWeight(fan_, codim_, w);
}

MinkowskiWeight MinkowskiWeight::operator*(const Int& s) const {
  std::map<std::size_t, Int> w;
  for (const auto& [id, x] : weights_) w.emplace(id, s * x);
  return MinkowskiWeight(fan_, codim_, w);
}

bool MinkowskiWeight::operator==(const MinkowskiWeight& o) const {
  return codim_ == o.codim_ && weights_ == o.weights_ && fan_ == o.fan_;
}

BalanceReport is_balanced(const MinkowskiWeight& c) {
  BalanceReport rep;
  const Fan& fan = c.fan();
  const std::size_t d = c.cone_dim();
  if (d == 0) return rep;
  std::set<std::size_t> taus;
  for (const auto& [sigma, w] : c.weights())
    for (auto tau : fan.cones_of_dim(d - 1))
      if (fan.contains_cone(sigma, tau)) taus.insert(tau);
  for (auto tau : taus) {
    IntVec total;
    for (auto sigma : fan.cofaces(tau, d)) {
      Int w = c.at(sigma);
      if (w == 0) continue;
      IntVec v = scale(w, lateral_generator(fan, tau, sigma).quotient);
      total = total.empty() ? v : add(total, v);
    }
    if (!total.empty() && !is_zero(total)) {
      rep.balanced = false;
      rep.failing.push_back(tau);
    }
  }
  return rep;
}

Fan support(const MinkowskiWeight& c) {
  const Fan& fan = c.fan();
  std::map<std::size_t, std::size_t> remap;
  std::vector<IntVec> rays;
  std::vector<RaySet> cones;
  for (const auto& [id, w] : c.weights()) {
    RaySet s;
    for (auto r : fan.cone(id).rays) {
      auto [it, fresh] = remap.emplace(r, rays.size());
      if (fresh) rays.push_back(fan.ray(r));
      s.push_back(it->second);
    }
    std::sort(s.begin(), s.end());
    cones.push_back(s);
  }
  return Fan::trusted(fan.ambient_dim(), std::move(rays), std::move(cones));
}

MinkowskiWeight restrict_to_support(const MinkowskiWeight& c) {
  Fan s = support(c);
  std::map<std::size_t, Int> w;
  for (const auto& [id, x] : c.weights()) w.emplace(s.cone_id_of_generators(c.fan().generators(id)), x);
  return MinkowskiWeight(s, c.codim(), w);
}

MinkowskiWeight divisor_to_weight(const ToricDivisor& d) {
  const Fan& fan = d.fan;
  const std::size_t n = fan.ambient_dim();
  if (n == 0) return MinkowskiWeight(fan, 0, {});
  if (!fan.is_pure() || fan.dim() != n)
    throw Error(ErrorCode::NotAWall, "divisor_to_weight: fan is not pure of full dimension");
  CartierData cd = cartier_data(d);
  std::map<std::size_t, Int> w;
  for (auto tau : fan.cones_of_dim(n - 1)) {
    if (!is_wall(fan, tau)) throw Error(ErrorCode::NotAWall, "divisor_to_weight: codimension-one cone is not a wall");
    w.emplace(tau, intersect_curve(d, cd, tau));
  }
  return MinkowskiWeight(fan, 1, w);
}

MinkowskiWeight kappa(const MinkowskiWeight& c, const PLFunction& f, const LiftHook& hook) {
  const Fan& fan = c.fan();
  if (f.fan().ambient_dim() != fan.ambient_dim()) throw Error(ErrorCode::RankMismatch, "kappa: rank mismatch");
  if (c.codim() == fan.ambient_dim()) throw Error(ErrorCode::WrongCodimension, "kappa: weight already has codimension n");
  BalanceReport bal = is_balanced(c);
  if (!bal.balanced) throw Error(ErrorCode::UnbalancedInput, "kappa: weight is not balanced");
  const std::size_t n = fan.ambient_dim();
  const std::size_t d = c.cone_dim();

  std::set<std::size_t> taus;
  for (const auto& [sigma, w] : c.weights())
    for (auto tau : fan.cones_of_dim(d - 1))
      if (fan.contains_cone(sigma, tau)) taus.insert(tau);

  std::map<std::size_t, Int> out;
  for (auto tau : taus) {
    RatVec f_tau = f.linear_on_generators(fan.generators(tau));
    RatVec sum = zero_rat(n);
    Rat local(0);
    for (auto sigma : fan.cofaces(tau, d)) {
      Int w = c.at(sigma);
      if (w == 0) continue;
      RatVec f_sigma = f.linear_on_generators(fan.generators(sigma));
      IntVec v = lateral_generator(fan, tau, sigma).lift;
      if (hook) v = hook(tau, sigma, v);
      RatVec vr = to_rat(v);
      sum = add(sum, scale(Rat(w), vr));
      local += Rat(w) * dot(f_sigma, vr);
    }
    Rat value = dot(f_tau, sum) - local;
    if (value.get_den() != 1) throw Error(ErrorCode::NonIntegralDivisor, "kappa: non-integral value");
    out.emplace(tau, value.get_num());
  }
  return MinkowskiWeight(fan, c.codim() + 1, out);
}

Int degree(const MinkowskiWeight& c) {
  if (c.codim() != c.fan().ambient_dim()) throw Error(ErrorCode::WrongCodimension, "degree: weight is not of codimension n");
  return c.at(c.fan().zero_cone());
}

bool strata_equivalent(const ToricDivisor& d1, const ToricDivisor& d2, const MinkowskiWeight& c) {
  return kappa(c, support_function(d1)) == kappa(c, support_function(d2));
}

bool lifts(const PLFunction& f, const ToricDivisor& d, const MinkowskiWeight& c) {
  return kappa(c, f) == kappa(c, support_function(d));
}

}  // namespace troplb
