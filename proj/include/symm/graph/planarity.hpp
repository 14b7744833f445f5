#pragma once

#include <vector>

#include "symm/graph/forbidden.hpp"
#include "symm/graph/graph.hpp"

namespace symm::graph {

/// Planarity of the underlying simple undirected graph: loops dropped,
/// parallel edges merged, direction ignored.
bool planarity_test(const Graph& g);

/// Edge-minimal nonplanar subgraph: one pass over edges in ascending id
/// order, deleting each edge whose removal keeps the graph nonplanar.
/// The result is edge-induced, keeps original ids, and is a subdivision of
/// K5 or K3,3. Throws PreconditionViolated if g is planar.
Graph kuratowski_extract(const Graph& g);

struct PlanarizeRound {
  EdgeIds kuratowski;  // edge ids of the extracted subgraph
  EdgeIds layer;       // invariant set removed this round
  EngineResult engine;  // on the edge lattice of the graph left so far
};

struct PlanarizeResult {
  EdgeIds removed_H;
  std::vector<PlanarizeRound> rounds;
  std::vector<Clause> clauses;
};

/// Invariant planarizing edge set grown from a planarizing seed removal.
/// Throws PreconditionViolated if g minus removed_N is not planar.
PlanarizeResult planarize_invariant(const Graph& g, const EdgeIds& removed_N, const ForbidOptions& options = {});

}  // namespace symm::graph
