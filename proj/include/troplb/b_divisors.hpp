// troplb/b_divisors.hpp - toric b-divisors at finite level: Cartier
// b-divisors as PL functions on a determining fan, Weil truncations on
// refinement towers, Z(a) for monomial ideals and nef envelopes.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "troplb/arith.hpp"
#include "troplb/fan.hpp"
#include "troplb/toric_divisors.hpp"

namespace troplb {

class CartierBDivisor {
 public:
  CartierBDivisor() = default;
  /// Throws NotARefinement unless phi's fan refines `base`.
  CartierBDivisor(Fan base, PLFunction phi);

  const Fan& base() const { return base_; }
  const Fan& determining_fan() const { return phi_.fan(); }
  const PLFunction& phi() const { return phi_; }
  Rat value(const RatVec& u) const { return phi_.eval_on_support(u); }

  CartierBDivisor operator*(const Rat& s) const { return CartierBDivisor(base_, phi_ * s); }

 private:
  Fan base_;
  PLFunction phi_;
};

/// A chain of refinements with a Weil divisor on each level.
class ModelTower {
 public:
  /// Throws NotARefinement or DimensionMismatch when levels or coefficients are incompatible.
  ModelTower(std::vector<Fan> levels, std::vector<QDivisor> divisors);

  std::size_t size() const { return levels_.size(); }
  const Fan& level(std::size_t i) const { return levels_.at(i); }
  const QDivisor& divisor(std::size_t i) const { return divisors_.at(i); }

  /// The tower of push-forwards of `b` to each level.
  static ModelTower of(const CartierBDivisor& b, std::vector<Fan> levels);

 private:
  std::vector<Fan> levels_;
  std::vector<QDivisor> divisors_;
};

struct MonomialIdeal {
  std::size_t ambient_dim = 0;
  std::vector<IntVec> generators;

  MonomialIdeal() = default;
  /// Throws DimensionMismatch on an empty generator list or wrong lengths.
  MonomialIdeal(std::size_t n, std::vector<IntVec> gens);
};

/// Cones of `fan` cut by the closed cones {u : A u >= 0}, one per region.
Fan refine_by_regions(const Fan& fan, const std::vector<RatMatrix>& regions);
Fan common_refinement(const Fan& a, const Fan& b);

/// phi(u) = min_i <forms_i, u> on the support of `base`, determined on a
/// simplicial common refinement of `base` with the normal fan of the forms.
CartierBDivisor min_of_linear_forms(const Fan& base, const std::vector<RatVec>& forms);

/// phi linear on every cone of `model`. Throws IncomparableModels.
bool determined_on(const CartierBDivisor& b, const Fan& model);

/// Coefficient -phi(u_rho) on each ray of `model`. Throws NotARefinement.
QDivisor push_forward(const CartierBDivisor& b, const Fan& model);

/// Support function of D carried to `model`. Throws NotCartier, NotARefinement.
CartierBDivisor pull_back(const ToricDivisor& d, const Fan& model);

CartierBDivisor z_of_ideal(const MonomialIdeal& a, const Fan& base);

/// Concavity across walls of the determining fan whose adjacent cones lie in
/// one cone of the base.
bool is_relatively_nef(const CartierBDivisor& b);
/// Concavity across every wall of the determining fan.
bool is_nef(const CartierBDivisor& b);

/// phi(u) = min over the minimal faces of P_D of <m, u>. Throws EmptyPolytope, UnboundedOnSupport.
CartierBDivisor nef_envelope(const ToricDivisor& d);

/// (1/m) min over lattice points p of m P_D of <p, u>; requires bounded P_D.
Rat graded_envelope_value(const ToricDivisor& d, const Int& m, const RatVec& u);

/// phi_a == phi_b at every ray of a common refinement of the determining fans.
bool same_function(const CartierBDivisor& a, const CartierBDivisor& b);
/// phi_a <= phi_b pointwise on the common support.
bool leq_function(const CartierBDivisor& a, const CartierBDivisor& b);

/// The b-divisor seen on a sub-fan: cones of the determining fan lying in |sub|.
CartierBDivisor restrict_to_subfan(const CartierBDivisor& b, const Fan& sub);

/// Extends b to a refinement of a fan containing its base as a sub-fan, by
/// stellar subdivision of `ambient` at the new rays; nullopt if the
/// determining fan does not appear as a sub-fan of the result.
std::optional<CartierBDivisor> extend_to(const CartierBDivisor& b, const Fan& ambient);

}  // namespace troplb
