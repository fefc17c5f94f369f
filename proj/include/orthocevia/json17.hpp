#pragma once

#include <string>

#include <json.hpp>

namespace orthocevia {

// Serializes a JSON document with every floating-point number rendered at 17
// significant digits, so doubles round-trip exactly and output is
// byte-reproducible. nlohmann's own dump() emits shortest-round-trip forms,
// which is not the pinned format.
std::string dump_json17(const nlohmann::ordered_json& doc, int indent = 2);

nlohmann::ordered_json point_to_json(double x, double y);

} // namespace orthocevia
