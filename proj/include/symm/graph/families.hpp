#pragma once

#include <cstddef>

#include "symm/graph/graph.hpp"

namespace symm::graph {

struct GnGraph {
  Graph graph;
  EdgeIds designated;  // every n-th cycle edge; removing them leaves a planar graph
  Permutation rotation;  // vertex positions, one step along the long cycle
};

/// K5 with one Hamiltonian 5-cycle subdivided into a 5n-cycle c_0..c_{5n-1}
/// and n copies of the remaining pentagram glued along it, copy j rotated by
/// j cycle edges: diagonals c_{j+na} -- c_{j+n(a+2)}. Cycle edge i is
/// c_i c_{i+1} with id i; copy j's diagonal a has id 5n + 5j + a.
GnGraph gen_Gn(std::size_t n);

}  // namespace symm::graph
