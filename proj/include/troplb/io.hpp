// troplb/io.hpp - self-describing JSON documents for every domain object.
//
// A document is {"schema": "troplb/1", "kind": K, "payload": P}. Integers
// are JSON numbers when they fit in 64 bits and decimal strings otherwise;
// rationals are "p/q" strings in lowest terms. Printing is canonical: fixed
// key order, rays sorted, cones as sorted index arrays, containers inlined
// when they fit in 80 columns.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "troplb/arith.hpp"
#include "troplb/b_divisors.hpp"
#include "troplb/error.hpp"
#include "troplb/fan.hpp"
#include "troplb/fan_ops.hpp"
#include "troplb/minkowski_weights.hpp"
#include "troplb/toric_divisors.hpp"
#include "troplb/trop_hypersurface.hpp"
#include "troplb/trop_line_bundles.hpp"

namespace troplb::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "troplb/1";

struct Document {
  std::string kind;
  Json payload;
};

/// Checks the envelope; payloads are decoded by the typed readers below.
/// Throws SchemaError.
Document parse_document(std::string_view text);
std::string print_document(const Document& doc);
/// Canonical text of an arbitrary JSON value, with trailing newline.
std::string print_json(const Json& value);

/// Decodes a document into its domain object and prints it again.
std::string canonicalize(std::string_view text);

Json int_json(const Int& x);
Json rat_json(const Rat& x);
Int parse_int(const Json& j, const std::string& path);
Rat parse_rat(const Json& j, const std::string& path);
Json int_vec_json(const IntVec& v);
Json rat_vec_json(const RatVec& v);
/// Ray indices of a cone.
Json cone_json(const Fan& fan, std::size_t id);

Document to_document(const Fan& fan);
Document to_document(const MinkowskiWeight& c);
Document to_document(const ToricDivisor& d);
Document to_document(const QDivisor& d);
Document to_document(const PLFunction& f);
Document to_document(const StrataWeights& w);
Document to_document(const CartierBDivisor& b);
Document to_document(const LaurentSupport& f);
Document to_document(const RationalComplex& k);
Document report(Json payload);
Document error_document(const Error& e);

/// Kind "fan"; also accepts the fan embedded in weighted_fan, divisor and
/// pl_function documents.
Fan read_fan(const Document& doc);
MinkowskiWeight read_weight(const Document& doc);
QDivisor read_qdivisor(const Document& doc);
/// Throws NonIntegralDivisor for fractional coefficients.
ToricDivisor read_divisor(const Document& doc);
PLFunction read_pl_function(const Document& doc);
StrataWeights read_strata_weights(const Document& doc);
CartierBDivisor read_bdivisor(const Document& doc);
LaurentSupport read_laurent_support(const Document& doc);
RationalComplex read_rational_complex(const Document& doc);

/// Cone of `fan` spanned by the given ray indices. Throws SchemaError.
std::size_t cone_from_indices(const Fan& fan, const std::vector<std::size_t>& rays,
                              const std::string& path);

}  // namespace troplb::io
