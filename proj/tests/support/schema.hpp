#pragma once

#include <json.hpp>

#include <string>

// Validator for the JSON-Schema subset used by the published schema files:
// type, enum, properties, required, additionalProperties (boolean), items,
// minimum, pattern.
namespace schema {

// Returns an empty string when `value` conforms, otherwise a description of
// the first violation.
std::string validate(const nlohmann::json& sch, const nlohmann::json& value,
                     const std::string& path = "$");

}  // namespace schema
