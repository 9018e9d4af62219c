#pragma once

/*
 * json_io.hpp — JSON schemas for every externally visible object.
 *
 * Rationals travel as "p/q" strings so frequency lattices survive the round
 * trip exactly; coefficients are plain floats. Serialization is canonical
 * (sorted object keys, lexicographic term order, shortest-round-trip float
 * text), so emit -> parse -> emit is byte-identical. Unknown fields are
 * rejected. CLI documents carry "apw_schema": 1.
 */

#include <json.hpp>

#include "apw/corona.hpp"

namespace apw {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

// Throws ParseError when `j` has a field outside `allowed`.
void check_fields(const Json& j, std::initializer_list<const char*> allowed, const char* where);

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j, const char* where);

Json basis_to_json(const FrequencyBasis& b);
BasisPtr basis_from_json(const Json& j);

Json poly_to_json(const ApPoly& f);
ApPoly poly_from_json(const Json& j);

Json matrix_to_json(const ApMatrix& g);
ApMatrix matrix_from_json(const Json& j);

Json halfspace_to_json(const Halfspace& s);
HalfspacePtr halfspace_from_json(const Json& j);

Json mask_kind_to_json(MaskKind kind);
MaskKind mask_kind_from_json(const Json& j);

Json factorization_to_json(const ApFactorization& f);
ApFactorization factorization_from_json(const Json& j, const HalfspacePtr& S);

Json corona_solution_to_json(const CoronaSolution& s);
CoronaSolution corona_solution_from_json(const Json& j);

// Wraps a payload as a CLI document with the schema version stamp.
Json make_document(Json payload);
// Validates and strips the schema stamp.
Json open_document(const Json& doc);

} // namespace apw
