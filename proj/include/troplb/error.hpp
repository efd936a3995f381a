// troplb/error.hpp - error taxonomy shared by all modules.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "troplb/arith.hpp"

namespace troplb {

enum class ErrorCode {
  ZeroVector,
  RankMismatch,
  ConeNotInFan,
  NotAFacetPair,
  NotAFan,
  NonSimplicialFan,
  NotARefinement,
  DimensionZeroPolytope,
  NotCartier,
  NotAWall,
  UnbalancedInput,
  FunctionNotLinearOnCone,
  WrongCodimension,
  DimensionMismatch,
  NonSimplicial,
  Infeasible,
  EmptyPolytope,
  UnboundedOnSupport,
  IncomparableModels,
  NonIntegralDivisor,
  Schema,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when a divisor has no integral local equation on some maximal cone.
class NotCartierError : public Error {
 public:
  NotCartierError(std::vector<std::size_t> cone, std::optional<RatVec> rational_solution,
                  const std::string& message)
      : Error(ErrorCode::NotCartier, message),
        cone_(std::move(cone)),
        rational_solution_(std::move(rational_solution)) {}

  /// Ray indices of the failing maximal cone.
  const std::vector<std::size_t>& cone() const { return cone_; }
  /// A non-integral solution of the local system, if the system is solvable over Q.
  const std::optional<RatVec>& rational_solution() const { return rational_solution_; }

 private:
  std::vector<std::size_t> cone_;
  std::optional<RatVec> rational_solution_;
};

/// Document parsing failure; `path` is a dotted field path such as payload.rays[2].
class SchemaError : public Error {
 public:
  SchemaError(std::string path, const std::string& message)
      : Error(ErrorCode::Schema, path.empty() ? message : path + ": " + message),
        path_(std::move(path)),
        detail_(message) {}

  const std::string& path() const { return path_; }
  /// The message without the path prefix.
  const std::string& detail() const { return detail_; }

 private:
  std::string path_;
  std::string detail_;
};

}  // namespace troplb
