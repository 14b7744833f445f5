#include "symm/graph/planarity.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace symm::graph {

bool planarity_test(const Graph& g) {
  std::set<std::pair<std::size_t, std::size_t>> simple;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.ends(e);
    if (a == b) continue;
    simple.emplace(std::min(a, b), std::max(a, b));
  }
  // Cheap rejection: a simple planar graph on v >= 3 vertices has at most 3v - 6 edges.
  const std::size_t v = g.vertex_count();
  if (v >= 3 && simple.size() > 3 * v - 6) return false;
  using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BGraph bg(v);
  for (const auto& [a, b] : simple) boost::add_edge(a, b, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

Graph kuratowski_extract(const Graph& g) {
  if (planarity_test(g)) throw PreconditionViolated("kuratowski_extract: graph is planar");
  std::vector<std::size_t> order(g.edge_count());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto x, auto y) { return g.edges()[x].id < g.edges()[y].id; });
  // Deleting an edge never makes a planar graph nonplanar, so an edge kept
  // once stays necessary for the rest of the pass: one pass is minimal.
  Bitset keep = Bitset::full(g.edge_count());
  for (auto e : order) {
    keep.reset(e);
    if (planarity_test(g.restrict_edges(keep))) keep.set(e);
  }
  return g.edge_induced(keep);
}

PlanarizeResult planarize_invariant(const Graph& g, const EdgeIds& removed_N, const ForbidOptions& options) {
  const Bitset seed_removed = g.edge_set(removed_N);
  if (!planarity_test(g.restrict_edges(seed_removed.complement())))
    throw PreconditionViolated("planarize_invariant: graph minus the seed removal is not planar");

  PlanarizeResult out;
  Bitset acc(g.edge_count());
  while (true) {
    Graph current = g.restrict_edges(acc.complement());
    if (planarity_test(current)) break;
    Graph k = kuratowski_extract(current);
    EdgeIds cur_removed = g.edge_ids(seed_removed - acc);
    auto res = forbid_invariant(current, cur_removed, {k}, options);
    if (res.removed_H.empty()) throw InvariantViolation("planarize_invariant: empty layer on a nonplanar graph");
    out.rounds.push_back({k.all_edge_ids(), res.removed_H, res.engine});
    acc |= g.edge_set(res.removed_H);
  }
  out.removed_H = g.edge_ids(acc);

  auto el = edge_lattice(g, options.aut_cap);
  out.clauses = {
      {"invariant", is_invariant_edge_set(el.edge_generators, acc), ""},
      {"planar-complement", planarity_test(g.restrict_edges(acc.complement())), ""},
      {"rounds-bounded", out.rounds.size() <= seed_removed.count(), std::to_string(out.rounds.size()) + " rounds"},
  };
  require_all(out.clauses, "planarize_invariant");
  return out;
}

}  // namespace symm::graph
