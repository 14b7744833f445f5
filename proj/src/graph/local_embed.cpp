#include "symm/graph/local_embed.hpp"

#include <numeric>
#include <string>

#include "symm/core/kernels.hpp"

namespace symm::graph {

std::optional<Bitset> first_non_embeddable(const Graph& g, const Graph& target, Execution exec) {
  std::vector<std::size_t> positions(g.edge_count());
  std::iota(positions.begin(), positions.end(), 0);
  for (std::size_t k = 1; k <= g.edge_count(); ++k) {
    auto hit = first_subset(
        positions, k,
        [&](std::span<const std::size_t> pick) {
          Bitset keep(g.edge_count());
          for (auto p : pick) keep.set(p);
          return !embed(g.edge_induced(keep), target).has_value();
        },
        exec);
    if (hit) {
      Bitset keep(g.edge_count());
      for (auto p : *hit) keep.set(p);
      return keep;
    }
  }
  return std::nullopt;
}

LocalEmbedResult local_embed_invariant(const Graph& g, const EdgeIds& removed_M, std::size_t size_cap,
                                       const ForbidOptions& options) {
  if (g.edge_count() > size_cap)
    throw PreconditionViolated("local_embed_invariant: " + std::to_string(g.edge_count()) +
                               " edges exceeds the size cap " + std::to_string(size_cap));
  const Bitset removed = g.edge_set(removed_M);
  const Graph target = g.restrict_edges(removed.complement());
  const Execution exec = options.engine.execution;

  LocalEmbedResult out;
  Bitset acc(g.edge_count());
  while (true) {
    Graph current = g.restrict_edges(acc.complement());
    auto bad = first_non_embeddable(current, target, exec);
    if (!bad) break;
    Graph witness = current.edge_induced(*bad);
    auto res = forbid_invariant(current, g.edge_ids(removed - acc), {witness}, options);
    if (res.removed_H.empty()) throw InvariantViolation("local_embed_invariant: empty layer");
    out.rounds.push_back({witness.all_edge_ids(), res.removed_H});
    acc |= g.edge_set(res.removed_H);
  }
  out.removed_H = g.edge_ids(acc);

  auto el = edge_lattice(g, options.aut_cap);
  const Graph rest = g.restrict_edges(acc.complement());
  out.clauses = {
      {"invariant", is_invariant_edge_set(el.edge_generators, acc), ""},
      {"locally-embeds", !first_non_embeddable(rest, target, Execution::serial).has_value(), ""},
  };
  require_all(out.clauses, "local_embed_invariant");
  return out;
}

}  // namespace symm::graph
