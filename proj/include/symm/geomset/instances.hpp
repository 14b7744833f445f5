#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symm/core/engine.hpp"
#include "symm/core/verification.hpp"
#include "symm/geomset/points.hpp"

namespace symm::geomset {

using Ids = std::vector<std::size_t>;

struct RunOptions {
  std::size_t aut_cap = graph::kDefaultSearchCap;
  EngineOptions engine;
};

/// Result of an engine run on the subset lattice of points or candidates.
struct SubsetRunResult {
  Ids removed_H;
  EngineResult engine;
  std::vector<Clause> clauses;
  std::vector<Permutation> generators;
  Integer group_order;
};

/// All k-subsets of `points` lying on a common sphere, lexicographic.
std::vector<Ids> cospherical_subsets(const PointSet& points, std::size_t k, bool allow_planes = false);

/// P(N_1..N_k): no distinct x_i in N_i lie on one sphere.
Predicate sphere_predicate(const PointSet& points, std::size_t k, bool allow_planes = false);

/// First k-subset of the kept points on a common sphere, if any.
std::optional<Ids> find_cospherical(const PointSet& points, const Bitset& kept, std::size_t k, bool allow_planes,
                                    Execution exec = Execution::parallel);

/// Invariant removal, from a removal after which no k remaining points are
/// cospherical. Throws PreconditionViolated if remove_N does not achieve it.
SubsetRunResult sphere_invariant_run(const PointSet& points, const Ids& remove_N, std::size_t k = 4,
                                     bool allow_planes = false, const RunOptions& options = {});

/// respects[y][x]: candidate y respects candidate x.
struct Relation {
  std::size_t n = 0;
  std::vector<std::vector<bool>> respects;
};

/// n on the first token, then n rows of n 0/1 entries.
Relation parse_relation(const std::string& text);

/// Majority threshold for a k-tuple: ceil((k+1)/2).
std::size_t majority(std::size_t k);

/// Whether the given k candidates contain someone respected by a majority
/// of them. With self_respect the candidate's own opinion of themself
/// counts toward the majority; without it only the other k-1 vote.
bool efficient_subset(const Relation& r, std::span<const std::size_t> subset, bool self_respect = true);

/// Every k-subset of the team is efficient (vacuous below k members).
bool efficient_team_check(const Relation& r, const Ids& team, std::size_t k = 5, bool self_respect = true,
                          Execution exec = Execution::parallel);

/// P(N_1..N_k): every choice of distinct x_i in N_i is efficient.
Predicate team_predicate(const Relation& r, std::size_t k = 5, bool self_respect = true);

/// Automorphisms of the respects digraph (self-respect entries as loops).
graph::AutomorphismGroup relation_automorphisms(const Relation& r, std::size_t cap = graph::kDefaultSearchCap);

/// Invariant expulsion leaving an efficient team. Throws
/// PreconditionViolated if the remaining team after expel_N is not
/// efficient.
SubsetRunResult team_invariant_run(const Relation& r, const Ids& expel_N, std::size_t k = 5, bool self_respect = true,
                                   const RunOptions& options = {});

}  // namespace symm::geomset
