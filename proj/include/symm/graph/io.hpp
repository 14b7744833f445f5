#pragma once

#include <vector>

#include <json.hpp>

#include "symm/graph/embed.hpp"
#include "symm/graph/graph.hpp"

namespace symm::graph {

/// {"directed": bool, "vertices": [{"id", "color"?}], "edges": [{"id", "u", "v", "color"?}]}
/// Malformed input throws ParseError; structural problems (missing vertex,
/// duplicate id) throw PreconditionViolated.
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);

/// Edge-set files are plain arrays of ids; duplicates are dropped.
EdgeIds edge_ids_from_json(const nlohmann::json& j);
std::vector<Graph> family_from_json(const nlohmann::json& j);
nlohmann::json embedding_to_json(const Embedding& e);

}  // namespace symm::graph
