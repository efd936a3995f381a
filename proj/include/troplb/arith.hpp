// troplb/arith.hpp - exact integer/rational scalars and vectors.

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace troplb {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;
using IntMatrix = std::vector<IntVec>;
using RatMatrix = std::vector<RatVec>;

Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);
Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

Int dot(const IntVec& a, const IntVec& b);
Rat dot(const RatVec& a, const RatVec& b);
Rat dot(const RatVec& a, const IntVec& b);

IntVec zero_int(std::size_t n);
RatVec zero_rat(std::size_t n);
IntVec unit_int(std::size_t n, std::size_t i);
bool is_zero(const IntVec& v);
bool is_zero(const RatVec& v);

IntVec add(const IntVec& a, const IntVec& b);
IntVec sub(const IntVec& a, const IntVec& b);
IntVec scale(const Int& s, const IntVec& v);
IntVec negate(const IntVec& v);
RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec scale(const Rat& s, const RatVec& v);

RatVec to_rat(const IntVec& v);
RatMatrix to_rat(const IntMatrix& m);
/// Integer vector if every entry has denominator one.
bool is_integral(const RatVec& v);
IntVec to_int(const RatVec& v);

/// gcd of the absolute values of the coordinates (0 for the zero vector).
Int content(const IntVec& v);

/// v / gcd(|v_i|). Throws ZeroVector on v = 0.
IntVec primitive(const IntVec& v);

/// Smallest positive integer multiple of v, made primitive. Throws ZeroVector.
IntVec primitive(const RatVec& v);

IntMatrix transpose(const IntMatrix& m, std::size_t ncols);

std::string to_string(const Int& x);
std::string to_string(const Rat& x);
std::string to_string(const IntVec& v);
std::string to_string(const RatVec& v);

}  // namespace troplb
