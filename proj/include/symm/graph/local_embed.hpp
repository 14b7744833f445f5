#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "symm/graph/forbidden.hpp"

namespace symm::graph {

inline constexpr std::size_t kDefaultLocalEmbedCap = 16;

/// Smallest edge subset of `g` (by size, then lexicographic over edge
/// positions) whose edge-induced subgraph does not embed into `target`.
std::optional<Bitset> first_non_embeddable(const Graph& g, const Graph& target,
                                           Execution exec = Execution::parallel);

struct LocalEmbedRound {
  EdgeIds witness;  // a subgraph of the current graph not embeddable into N
  EdgeIds layer;
};

struct LocalEmbedResult {
  EdgeIds removed_H;
  std::vector<LocalEmbedRound> rounds;
  std::vector<Clause> clauses;
};

/// Invariant edge set whose removal leaves a graph every subgraph of which
/// embeds into N = g minus removed_M. Exponential in the edge count; throws
/// PreconditionViolated when g has more than size_cap edges.
LocalEmbedResult local_embed_invariant(const Graph& g, const EdgeIds& removed_M,
                                       std::size_t size_cap = kDefaultLocalEmbedCap,
                                       const ForbidOptions& options = {});

}  // namespace symm::graph
