#pragma once

#include <string_view>

#include "json.hpp"

#include "evencl/azumaya.hpp"
#include "evencl/classify.hpp"

namespace evencl {

using Json = nlohmann::json;

// Ring elements are serialized as their canonical strings ("3", "-1/2", "2+3e").
Json to_json(const Elem& x);
Json to_json(const QuadraticForm3& q);
Json to_json(const BilinearForm3& b);
Json to_json(const AlgebraStructure4& a);
Json to_json(const AlgebraMap& phi);
Json to_json(const Similarity& s);
Json to_json(const BijectionReport& r);
Json to_json(const ExactRowsReport& r);
Json to_json(const AgreementRow& row);

QuadraticForm3 form_from_json(const Json& j);
BilinearForm3 bilinear_from_json(const Json& j);
AlgebraStructure4 algebra_from_json(const Json& j);
AlgebraMap map_from_json(const Json& j);

/// "a1,a2,a3,u23,u13,u12". Throws ParseError.
QuadraticForm3 parse_form(const Ring& r, std::string_view text);
/// Nine entries row by row, separated by ',' or ';'. Throws ParseError.
Mat3 parse_matrix3(const Ring& r, std::string_view text);
/// Sixteen entries row by row. Throws ParseError.
Mat4 parse_matrix4(const Ring& r, std::string_view text);

/// Canonical serialization: sorted keys, no whitespace.
std::string canonical_dump(const Json& j);

}  // namespace evencl
