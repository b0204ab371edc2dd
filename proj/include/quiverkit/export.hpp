#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "quiverkit/quiver.hpp"

namespace quiverkit {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchema = "quiverkit/1";

// {"vertices":[labels...], "arrows":[[src,tgt],...], "tau":{label:label}}
// Vertices in index order, arrows sorted, an arrow repeated per multiplicity.
Json to_json(const TranslationQuiver& tq);

// One digraph; solid edges for arrows, dashed "tau" edges from y to tau(y).
std::string to_dot(const TranslationQuiver& tq, std::string_view graph_name = "G");

}  // namespace quiverkit
