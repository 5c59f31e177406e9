#pragma once

// Arrangement files and the gallery: URI scheme.
//
//   {"field": {"kind": "quadratic", "d": 5}, "k": 3,
//    "normals": [["1", "0", "1/2 + 1/2*g"], ...]}
//
// Field kinds: rational; quadratic (d); prime (p); galois (p, modulus low
// degree first); cyclotomic (m).

#include <string>

#include "json.hpp"

#include "discarr/arrangement.hpp"

namespace discarr::tools {

using nlohmann::json;

json field_to_json(const FieldDescriptor& fd);
FieldDescriptor field_from_json(const json& j);

json arrangement_to_json(const Arrangement& a);
/// Throws ParseError for malformed documents and element strings.
Arrangement arrangement_from_json(const json& j);
Arrangement parse_arrangement(const std::string& text);

/// "gallery:<name>" or a path to an arrangement file.
Arrangement load_arrangement(const std::string& source);

/// FNV-1a 64 over the compact dump of the arrangement document, as hex.
std::string digest(const Arrangement& a);

}  // namespace discarr::tools
