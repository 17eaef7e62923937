#pragma once

#include <json.hpp>

#include "recsym/pauli.hpp"

namespace recsym {

using Json = nlohmann::ordered_json;

// Wire format:
//   cscalar: {"re": R, "im": R}; exact R is a "p/q" string, float R a number
//   Quat4:   {"s": cscalar, "v": [cscalar, cscalar, cscalar]}
//   Mat2:    {"m": [[cscalar, cscalar], [cscalar, cscalar]]}

Json to_json(const CScalar& s);
Json to_json(const Vec3& v);
Json to_json(const Quat4& q);
Json to_json(const Mat2& m);

/// Throws Errc::InvalidArgument on malformed input.
CScalar cscalar_from_json(const Json& j);
Quat4 quat_from_json(const Json& j);
Mat2 mat_from_json(const Json& j);

}  // namespace recsym
