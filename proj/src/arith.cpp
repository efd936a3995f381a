#include "troplb/arith.hpp"

#include <sstream>

#include "troplb/error.hpp"

namespace troplb {

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::RankMismatch, "dot: length mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::RankMismatch, "dot: length mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const RatVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::RankMismatch, "dot: length mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
  return s;
}

IntVec zero_int(std::size_t n) { return IntVec(n, Int(0)); }
RatVec zero_rat(std::size_t n) { return RatVec(n, Rat(0)); }

IntVec unit_int(std::size_t n, std::size_t i) {
  IntVec v = zero_int(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const IntVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

bool is_zero(const RatVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

IntVec add(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b.at(i);
  return r;
}

IntVec sub(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b.at(i);
  return r;
}

IntVec scale(const Int& s, const IntVec& v) {
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

IntVec negate(const IntVec& v) { return scale(Int(-1), v); }

RatVec add(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b.at(i);
  return r;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b.at(i);
  return r;
}

RatVec scale(const Rat& s, const RatVec& v) {
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

RatVec to_rat(const IntVec& v) {
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

RatMatrix to_rat(const IntMatrix& m) {
  RatMatrix r;
  r.reserve(m.size());
  for (const auto& row : m) r.push_back(to_rat(row));
  return r;
}

bool is_integral(const RatVec& v) {
  for (const auto& x : v)
    if (x.get_den() != 1) return false;
  return true;
}

IntVec to_int(const RatVec& v) {
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].get_den() != 1) throw Error(ErrorCode::NonIntegralDivisor, "to_int: non-integral entry");
    r[i] = v[i].get_num();
  }
  return r;
}

Int content(const IntVec& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

IntVec primitive(const IntVec& v) {
  Int g = content(v);
  if (g == 0) throw Error(ErrorCode::ZeroVector, "primitive: zero vector has no direction");
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  return r;
}

IntVec primitive(const RatVec& v) {
  Int den = 1;
  for (const auto& x : v) den = lcm(den, x.get_den());
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rat s = v[i] * Rat(den);
    r[i] = s.get_num();
  }
  return primitive(r);
}

IntMatrix transpose(const IntMatrix& m, std::size_t ncols) {
  IntMatrix t(ncols, IntVec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < ncols; ++j) t[j][i] = m[i].at(j);
  return t;
}

std::string to_string(const Int& x) { return x.get_str(); }

std::string to_string(const Rat& x) {
  Rat c = x;
  c.canonicalize();
  return c.get_str();
}

std::string to_string(const IntVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ')';
  return os.str();
}

std::string to_string(const RatVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << to_string(v[i]);
  os << ')';
  return os.str();
}

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::ConeNotInFan: return "ConeNotInFan";
    case ErrorCode::NotAFacetPair: return "NotAFacetPair";
    case ErrorCode::NotAFan: return "NotAFan";
    case ErrorCode::NonSimplicialFan: return "NonSimplicialFan";
    case ErrorCode::NotARefinement: return "NotARefinement";
    case ErrorCode::DimensionZeroPolytope: return "DimensionZeroPolytope";
    case ErrorCode::NotCartier: return "NotCartier";
    case ErrorCode::NotAWall: return "NotAWall";
    case ErrorCode::UnbalancedInput: return "UnbalancedInput";
    case ErrorCode::FunctionNotLinearOnCone: return "FunctionNotLinearOnCone";
    case ErrorCode::WrongCodimension: return "WrongCodimension";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonSimplicial: return "NonSimplicial";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::EmptyPolytope: return "EmptyPolytope";
    case ErrorCode::UnboundedOnSupport: return "UnboundedOnSupport";
    case ErrorCode::IncomparableModels: return "IncomparableModels";
    case ErrorCode::NonIntegralDivisor: return "NonIntegralDivisor";
    case ErrorCode::Schema: return "SchemaError";
  }
  return "Unknown";
}

}  // namespace troplb
