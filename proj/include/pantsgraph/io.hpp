#pragma once

// JSON and DOT encodings.

#include <string>

#include <json.hpp>

#include "pantsgraph/farey.hpp"
#include "pantsgraph/mcg_action.hpp"
#include "pantsgraph/normalization.hpp"
#include "pantsgraph/pants_graph.hpp"

namespace pantsgraph {

using Json = nlohmann::ordered_json;

Json to_json(const ChordId& c);
Json to_json(const Curve& c);
Json to_json(const PantsDecomposition& p, bool canonical = true);
Json to_json(const MappingClassWord& w);
Json to_json(const Generator& g);
Json to_json(const PantsGraphFragment& g);
Json to_json(const Slope& s);
Json to_json(const SlopeGraph& g);

/// Vertex normalization of p, with its split profile.
Json normalization_json(const PantsDecomposition& p);
Json to_json(const EdgeNormalization& e);

/// Parses text, reporting syntax errors with line and column.
Json parse_json(const std::string& text, const std::string& source = "input");

ChordId chord_from_json(int n, const Json& j);
/// Accepts {"coords": [...]}, {"chord": [i, j]} or {"word": [...]}.
Curve curve_from_json(int n, const Json& j);
MappingClassWord word_from_json(int n, const Json& j);
/// {"n": N, "curves": [...], "apply": [...]?}; the optional word is applied
/// to the decomposition after it is validated. `n` is used when the object
/// has no "n" field.
PantsDecomposition pants_from_json(const Json& j, int n = 0);

std::string to_dot(const SlopeGraph& g, const std::string& name = "farey");

}  // namespace pantsgraph
