// troplb/toric_divisors.hpp - torus-invariant divisors, Cartier data,
// support functions and intersection numbers with invariant curves.
//
// Conventions: phi_D(u_rho) = -d_rho, P_D = {m : <m, u_rho> >= -d_rho},
// and D.V(tau) = <m_sigma2 - m_sigma1, v1> so that H.line = 1 on P^2.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "troplb/arith.hpp"
#include "troplb/fan.hpp"
#include "troplb/polyhedral.hpp"

namespace troplb {

struct ToricDivisor {
  Fan fan;
  IntVec coeffs;  // one per ray of `fan`

  ToricDivisor() = default;
  ToricDivisor(Fan f, IntVec c);
  static ToricDivisor zero(const Fan& f);
  /// The prime divisor D_rho of the ray with index `ray`.
  static ToricDivisor prime(const Fan& f, std::size_t ray);

  bool operator==(const ToricDivisor& o) const { return fan == o.fan && coeffs == o.coeffs; }
};

ToricDivisor operator+(const ToricDivisor& a, const ToricDivisor& b);
ToricDivisor operator-(const ToricDivisor& a, const ToricDivisor& b);
ToricDivisor operator*(const Int& s, const ToricDivisor& d);

/// Divisor with rational coefficients, e.g. a push-forward of a Q-b-divisor.
struct QDivisor {
  Fan fan;
  RatVec coeffs;
  bool operator==(const QDivisor& o) const { return fan == o.fan && coeffs == o.coeffs; }
};

/// m_sigma for every maximal cone, reduced modulo sigma^perp ∩ M.
struct CartierData {
  std::map<std::size_t, IntVec> m;  // maximal cone id -> character
  /// Character on any cone: the one of the first maximal cone containing it.
  const IntVec& on(const Fan& fan, std::size_t cone) const;
};

/// Throws NotCartierError naming the first failing maximal cone.
CartierData cartier_data(const ToricDivisor& d);
bool is_cartier(const ToricDivisor& d);
/// Integral character on one cone, or nullopt when D is not Cartier there.
std::optional<IntVec> local_character(const ToricDivisor& d, std::size_t cone);

LatticePolytope polytope(const ToricDivisor& d);

struct LocalSections {
  RatMatrix inequalities;  // rows u_rho for rho in sigma(1)
  RatVec rhs;              // -d_rho
  std::optional<IntVec> shift;            // m_0 when D is Cartier on sigma
  std::vector<IntVec> hilbert_basis;      // generators of the monoid sigma^dual ∩ M
  std::vector<IntVec> module_generators;  // minimal solutions; {m_0} when Cartier
};

/// {m : <m, u_rho> + d_rho >= 0 for rho in sigma(1)} as a module over sigma^dual ∩ M.
LocalSections local_sections(const ToricDivisor& d, std::size_t sigma);

ToricDivisor div_char(const IntVec& m, const Fan& fan);

/// Cones of `fan` bounding exactly two cones of one dimension higher.
std::vector<std::size_t> walls(const Fan& fan);
bool is_wall(const Fan& fan, std::size_t tau);

/// Throws NotAWall or NotCartier.
Int intersect_curve(const ToricDivisor& d, std::size_t tau);
/// Same, with the Cartier data precomputed.
Int intersect_curve(const ToricDivisor& d, const CartierData& cd, std::size_t tau);

/// Witness m with D = div(chi^m), or nullopt.
std::optional<IntVec> is_principal(const ToricDivisor& d);
/// D.V(tau) = 0 on every wall of codimension one. Throws NotCartier.
bool numerically_trivial(const ToricDivisor& d);

/// Rational function on the support of a simplicial fan, linear on each cone.
class PLFunction {
 public:
  PLFunction() = default;
  /// Throws NonSimplicialFan.
  PLFunction(Fan fan, RatVec values);

  static PLFunction linear(const Fan& fan, const RatVec& m);

  const Fan& fan() const { return fan_; }
  const RatVec& values() const { return values_; }

  /// Linear functional agreeing with the function on cone `id`, reduced so
  /// that coordinates outside a pivot set of the cone's span are zero.
  RatVec linear_on(std::size_t id) const;
  /// Value at x, or nullopt outside the support.
  std::optional<Rat> eval(const RatVec& x) const;
  Rat eval_on_support(const RatVec& x) const;
  /// Functional on the cone of this fan containing every generator in `gens`;
  /// throws FunctionNotLinearOnCone if there is none.
  RatVec linear_on_generators(const std::vector<IntVec>& gens) const;

  PLFunction operator+(const PLFunction& o) const;
  PLFunction operator*(const Rat& s) const;
  bool operator==(const PLFunction& o) const { return fan_ == o.fan_ && values_ == o.values_; }

 private:
  Fan fan_;
  RatVec values_;
};

/// Values -d_rho. Throws NotCartier or NonSimplicialFan.
PLFunction support_function(const ToricDivisor& d);

/// Refinement test plus Cartier transport: coefficient -phi_D(u) on each ray.
/// Throws NotCartier or NotARefinement.
ToricDivisor pullback(const ToricDivisor& d, const Fan& fine);

}  // namespace troplb
