#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "symm/core/engine.hpp"
#include "symm/core/errors.hpp"
#include "symm/core/verification.hpp"
#include "symm/graph/automorphism.hpp"
#include "symm/graph/embed.hpp"
#include "symm/graph/graph.hpp"

namespace symm::graph {

/// Raised when the seed already contains a forbidden subgraph; carries the
/// witness so callers can report it.
class ForbiddenSubgraphPresent : public PreconditionViolated {
 public:
  ForbiddenSubgraphPresent(std::size_t member, Embedding witness);
  std::size_t member() const { return member_; }
  const Embedding& witness() const { return witness_; }

 private:
  std::size_t member_;
  Embedding witness_;
};

/// Largest edge count in the family; throws PreconditionViolated on an
/// empty family or an edgeless member.
std::size_t family_arity(const std::vector<Graph>& family);

/// The t-ary predicate on kept-edge bitsets of `host`: no member F_i embeds
/// with its j-th edge inside argument j. A member with e < t edges only
/// constrains the first e arguments.
Predicate forbidden_subgraph_predicate(const Graph& host, std::vector<Graph> family);

/// Edge lattice of G: kept-edge bitsets, generators induced by Aut(G).
struct EdgeLattice {
  AutomorphismGroup aut;
  std::vector<Permutation> edge_generators;
  std::shared_ptr<SubsetLattice> lattice;
};
EdgeLattice edge_lattice(const Graph& g, std::size_t aut_cap = kDefaultSearchCap);

struct ForbidOptions {
  std::size_t aut_cap = kDefaultSearchCap;
  EngineOptions engine;
};

struct ForbidResult {
  EdgeIds removed_H;
  EngineResult engine;
  std::vector<Clause> clauses;
  std::vector<Permutation> vertex_generators;
  Integer group_order;
};

/// Invariant edge removal making G free of every family member, starting
/// from a non-invariant removal removed_N that already achieves this.
/// All five contract clauses are re-checked; a failure throws
/// InvariantViolation. Throws ForbiddenSubgraphPresent when G minus
/// removed_N still contains a member.
ForbidResult forbid_invariant(const Graph& g, const EdgeIds& removed_N, const std::vector<Graph>& family,
                              const ForbidOptions& options = {});

/// True when `set` is mapped onto itself by every edge generator.
bool is_invariant_edge_set(const std::vector<Permutation>& edge_generators, const Bitset& set);

/// First family member embedding into g restricted to `kept`, with witness.
std::optional<std::pair<std::size_t, Embedding>> find_forbidden(const Graph& g, const Bitset& kept,
                                                                 const std::vector<Graph>& family);

}  // namespace symm::graph
