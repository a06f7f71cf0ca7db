#pragma once

#include "milfib/diagram.hpp"

#include "json.hpp"

#include <string>

namespace milfib {

using Json = nlohmann::ordered_json;

/// Integers that fit a 64-bit signed value are emitted as JSON numbers,
/// larger ones as decimal strings; parsing accepts both.
Json integer_to_json(const Integer& v);
Integer integer_from_json(const Json& j, const std::string& path);

Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j, const std::string& path);

/// Parses the canonical diagram schema. Throws ParseError with field context
/// on malformed input.
DeformationDiagram diagram_from_json(const Json& j);
DeformationDiagram parse_diagram(const std::string& text);

Json diagram_to_json(const DeformationDiagram& d);
std::string serialize_diagram(const DeformationDiagram& d);

}  // namespace milfib
