// troplb/minkowski_weights.hpp - Minkowski weights, balancing and the
// intersection product kappa(c, f) with piecewise-linear functions.
//
// Codimension is measured in the ambient lattice: a weight of codimension k
// lives on the cones of dimension n - k.

#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "troplb/arith.hpp"
#include "troplb/fan.hpp"
#include "troplb/toric_divisors.hpp"

namespace troplb {

class MinkowskiWeight {
 public:
  MinkowskiWeight() = default;
  /// Zero entries are dropped. Throws DimensionMismatch for cones of the wrong dimension.
  MinkowskiWeight(Fan fan, std::size_t codim, std::map<std::size_t, Int> weights);
  /// Weight `value` on every cone of dimension n - codim.
  static MinkowskiWeight constant(const Fan& fan, std::size_t codim, const Int& value);

  const Fan& fan() const { return fan_; }
  std::size_t codim() const { return codim_; }
  std::size_t cone_dim() const { return fan_.ambient_dim() - codim_; }
  const std::map<std::size_t, Int>& weights() const { return weights_; }
  Int at(std::size_t cone) const;

  MinkowskiWeight operator+(const MinkowskiWeight& o) const;
  MinkowskiWeight operator*(const Int& s) const;
  bool operator==(const MinkowskiWeight& o) const;
  bool operator!=(const MinkowskiWeight& o) const { return !(*this == o); }

 private:
  Fan fan_;
  std::size_t codim_ = 0;
  std::map<std::size_t, Int> weights_;
};

/// A tropical hypersurface or user-supplied tropical cycle.
using WeightedFan = MinkowskiWeight;

struct BalanceReport {
  bool balanced = true;
  std::vector<std::size_t> failing;  // cones tau of dimension cone_dim - 1
};

BalanceReport is_balanced(const MinkowskiWeight& c);

/// Face closure of the cones with nonzero weight, rays renumbered.
Fan support(const MinkowskiWeight& c);
/// The same weight carried by its support fan.
MinkowskiWeight restrict_to_support(const MinkowskiWeight& c);

/// c(tau) = D.V(tau) on the codimension-one cones. Throws NotAWall, NotCartier.
MinkowskiWeight divisor_to_weight(const ToricDivisor& d);

/// Called with (tau, sigma, lift); returns the lift to use. Any element of
/// sigma + N_tau is admissible.
using LiftHook = std::function<IntVec(std::size_t, std::size_t, const IntVec&)>;

/// kappa(c, f)(tau) = f_tau(sum c(sigma) v_sigma) - sum c(sigma) f_sigma(v_sigma).
/// `f` may live on any simplicial fan such that every cone of Supp(c) lies in
/// a single cone of it.
/// Throws UnbalancedInput, FunctionNotLinearOnCone, NonIntegralDivisor.
MinkowskiWeight kappa(const MinkowskiWeight& c, const PLFunction& f, const LiftHook& hook = {});

/// Weight at the zero cone. Throws WrongCodimension unless codim = n.
Int degree(const MinkowskiWeight& c);

bool strata_equivalent(const ToricDivisor& d1, const ToricDivisor& d2, const MinkowskiWeight& c);

bool lifts(const PLFunction& f, const ToricDivisor& d, const MinkowskiWeight& c);

}  // namespace troplb
