#include "symm/graph/forbidden.hpp"

#include <algorithm>
#include <string>

namespace symm::graph {

ForbiddenSubgraphPresent::ForbiddenSubgraphPresent(std::size_t member, Embedding witness)
    : PreconditionViolated("forbidden member " + std::to_string(member) + " survives the seed removal"),
      member_(member),
      witness_(std::move(witness)) {}

std::size_t family_arity(const std::vector<Graph>& family) {
  if (family.empty()) throw PreconditionViolated("forbidden family is empty");
  std::size_t t = 0;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].edge_count() == 0)
      throw PreconditionViolated("forbidden member " + std::to_string(i) + " has no edges");
    t = std::max(t, family[i].edge_count());
  }
  return t;
}

Predicate forbidden_subgraph_predicate(const Graph& host, std::vector<Graph> family) {
  const std::size_t t = family_arity(family);
  return Predicate{"forbidden-subgraph", t, [host, family = std::move(family)](std::span<const Element> args) {
                     for (const auto& f : family) {
                       std::vector<Bitset> allowed(args.begin(), args.begin() + f.edge_count());
                       if (embed_constrained(f, host, allowed)) return false;
                     }
                     return true;
                   }};
}

EdgeLattice edge_lattice(const Graph& g, std::size_t aut_cap) {
  EdgeLattice out;
  out.aut = automorphism_group(g, aut_cap);
  out.edge_generators = edge_permutations(g, out.aut.generators);
  out.lattice = std::make_shared<SubsetLattice>(g.edge_count(), out.edge_generators);
  return out;
}

bool is_invariant_edge_set(const std::vector<Permutation>& edge_generators, const Bitset& set) {
  for (const auto& p : edge_generators)
    if (apply_permutation(p, set) != set) return false;
  return true;
}

std::optional<std::pair<std::size_t, Embedding>> find_forbidden(const Graph& g, const Bitset& kept,
                                                                 const std::vector<Graph>& family) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    std::vector<Bitset> allowed(family[i].edge_count(), kept);
    if (auto emb = embed_constrained(family[i], g, allowed)) return std::make_pair(i, std::move(*emb));
  }
  return std::nullopt;
}

ForbidResult forbid_invariant(const Graph& g, const EdgeIds& removed_N, const std::vector<Graph>& family,
                              const ForbidOptions& options) {
  const std::size_t t = family_arity(family);
  const Bitset removed = g.edge_set(removed_N);
  const Bitset seed = removed.complement();
  if (auto hit = find_forbidden(g, seed, family)) throw ForbiddenSubgraphPresent(hit->first, std::move(hit->second));

  auto el = edge_lattice(g, options.aut_cap);
  ForbidResult out;
  out.engine = engine_run(*el.lattice, seed, t, options.engine);
  out.vertex_generators = el.aut.generators;
  out.group_order = el.aut.order;
  const Bitset removed_H = out.engine.H.complement();
  out.removed_H = g.edge_ids(removed_H);

  Bitset orbit_union(g.edge_count());
  for (const auto& orbit : orbits_of(g.edge_count(), el.edge_generators))
    if (std::any_of(orbit.begin(), orbit.end(), [&](std::size_t e) { return removed.test(e); }))
      for (auto e : orbit) orbit_union.set(e);

  const Rational size(static_cast<long>(removed_H.count()));
  const Rational bound = iterate_f(Rational(static_cast<long>(removed.count())), t - 1);
  auto residual = find_forbidden(g, out.engine.H, family);
  out.clauses = {
      {"invariant", is_invariant_edge_set(el.edge_generators, removed_H), ""},
      {"forbidden-free", !residual.has_value(),
       residual ? "member " + std::to_string(residual->first) + " survives" : ""},
      {"bound", size <= bound, size.get_str() + " <= " + bound.get_str()},
      {"within-orbit-union", removed_H.subset_of(orbit_union), ""},
      {"meets-seed", removed_H.empty() || removed_H.intersects(removed), ""},
  };
  require_all(out.clauses, "forbid_invariant");
  return out;
}

}  // namespace symm::graph
