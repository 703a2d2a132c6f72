#pragma once

#include "json.hpp"
#include "kha/shuffle/types.hpp"

namespace kha::shuffle {

/// {"n": int, "components": [{"grade": [..], "terms": [{"coeff": "p/q", "orbit": [[..],..]}]}]}
nlohmann::json to_json(const KHAElement& e);

/// Inverse of to_json. Orbits must be weakly decreasing per vertex and
/// match their grade; violations raise ParseError.
KHAElement kha_from_json(const nlohmann::json& j);

}  // namespace kha::shuffle
