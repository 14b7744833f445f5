#pragma once

#include <map>
#include <optional>
#include <vector>

#include "symm/core/bitset.hpp"
#include "symm/graph/graph.hpp"

namespace symm::graph {

/// Pattern vertex id -> host vertex id, pattern edge id -> host edge id.
struct Embedding {
  std::map<int, int> vertex_map;
  std::map<int, int> edge_map;
};

/// Injective (not necessarily induced) subgraph embedding of `pattern` into
/// `host` where pattern edge j (in pattern edge order) lands in allowed[j],
/// a bitset over host edge positions. Pattern colors, when present, must
/// match. Loops and parallel edges are treated literally. Returns the
/// first embedding in a fixed search order, or nullopt.
std::optional<Embedding> embed_constrained(const Graph& pattern, const Graph& host,
                                           const std::vector<Bitset>& allowed);

/// Same, with allowed sets given as host edge ids.
std::optional<Embedding> embed_constrained_ids(const Graph& pattern, const Graph& host,
                                               const std::vector<EdgeIds>& allowed);

/// Unconstrained subgraph containment.
std::optional<Embedding> embed(const Graph& pattern, const Graph& host);

}  // namespace symm::graph
