#pragma once

#include <cstddef>
#include <vector>

#include "symm/core/bitset.hpp"
#include "symm/core/codim.hpp"
#include "symm/graph/graph.hpp"

namespace symm::graph {

inline constexpr std::size_t kDefaultSearchCap = 2000000;

/// Generators of Aut(G) as permutations of vertex positions, plus the group
/// order (product of the first-path orbit lengths).
struct AutomorphismGroup {
  std::vector<Permutation> generators;
  Integer order = 1;
  std::size_t nodes = 0;
};

/// Individualization-refinement search. Colors, loops, multiplicities and
/// direction are respected. Generators come out in a deterministic order.
/// Throws CapExceeded when the search visits more than `cap` nodes.
AutomorphismGroup automorphism_group(const Graph& g, std::size_t cap = kDefaultSearchCap);

/// Direct check that a vertex-position permutation preserves colors and the
/// edge multiset (with direction and edge colors).
bool is_automorphism(const Graph& g, const Permutation& vperm);

/// The induced action on edge positions. Parallel edges (same endpoints and
/// color) are additionally permuted among themselves, so the result
/// generates the full edge-automorphism group.
std::vector<Permutation> edge_permutations(const Graph& g, const std::vector<Permutation>& vertex_gens);

/// Orbit partition of edge ids under the induced action; each orbit sorted,
/// orbits sorted by smallest id.
std::vector<EdgeIds> edge_orbits(const Graph& g, const std::vector<Permutation>& vertex_gens);

/// Orbit partition of an arbitrary permutation action on {0..n-1}.
std::vector<std::vector<std::size_t>> orbits_of(std::size_t n, const std::vector<Permutation>& gens);

}  // namespace symm::graph
