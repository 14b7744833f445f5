#include "symm/geomset/instances.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "symm/core/kernels.hpp"
#include "symm/core/predicates.hpp"

namespace symm::geomset {

namespace {

Bitset to_set(std::size_t n, const Ids& ids) {
  Bitset b(n);
  for (auto i : ids) {
    if (i >= n) throw PreconditionViolated("id " + std::to_string(i) + " out of range");
    b.set(i);
  }
  return b;
}

Ids to_ids(const Bitset& b) { return b.indices(); }

// Shared tail of both runs: the engine on the subset lattice plus the five
// generic clauses. `property` re-checks the defining property on the kept
// set independently of the predicate.
SubsetRunResult run_subset_instance(std::size_t n, const std::vector<Permutation>& gens, const Integer& order,
                                    const Bitset& removed, std::size_t k,
                                    const std::function<bool(const Bitset&)>& property, const std::string& property_name,
                                    const RunOptions& options) {
  SubsetLattice lattice(n, gens);
  SubsetRunResult out;
  out.generators = gens;
  out.group_order = order;
  out.engine = engine_run(lattice, removed.complement(), k, options.engine);
  const Bitset removed_H = out.engine.H.complement();
  out.removed_H = to_ids(removed_H);

  Bitset orbit_union(n);
  for (const auto& orbit : graph::orbits_of(n, gens))
    if (std::any_of(orbit.begin(), orbit.end(), [&](std::size_t i) { return removed.test(i); }))
      for (auto i : orbit) orbit_union.set(i);
  bool invariant = true;
  for (const auto& p : gens) invariant = invariant && apply_permutation(p, removed_H) == removed_H;
  const Rational size(static_cast<long>(removed_H.count()));
  const Rational bound = iterate_f(Rational(static_cast<long>(removed.count())), k - 1);
  out.clauses = {
      {"invariant", invariant, ""},
      {property_name, property(out.engine.H), ""},
      {"bound", size <= bound, size.get_str() + " <= " + bound.get_str()},
      {"within-orbit-union", removed_H.subset_of(orbit_union), ""},
      {"meets-seed", removed_H.empty() || removed_H.intersects(removed), ""},
  };
  return out;
}

}  // namespace

std::optional<Ids> find_cospherical(const PointSet& points, const Bitset& kept, std::size_t k, bool allow_planes,
                                    Execution exec) {
  auto ids = to_ids(kept);
  return first_subset(
      ids, k,
      [&](std::span<const std::size_t> pick) {
        PointSet sub;
        for (auto i : pick) sub.push_back(points[i]);
        return on_common_sphere(sub, allow_planes);
      },
      exec);
}

std::vector<Ids> cospherical_subsets(const PointSet& points, std::size_t k, bool allow_planes) {
  std::vector<Ids> out;
  for_each_combination(points.size(), k, [&](std::span<const std::size_t> pick) {
    PointSet sub;
    for (auto i : pick) sub.push_back(points[i]);
    if (on_common_sphere(sub, allow_planes)) out.emplace_back(pick.begin(), pick.end());
    return true;
  });
  return out;
}

Predicate sphere_predicate(const PointSet& points, std::size_t k, bool allow_planes) {
  return forbidden_subset_predicate("sphere", k, cospherical_subsets(points, k, allow_planes));
}

SubsetRunResult sphere_invariant_run(const PointSet& points, const Ids& remove_N, std::size_t k, bool allow_planes,
                                     const RunOptions& options) {
  if (k == 0) throw PreconditionViolated("sphere_invariant_run: k must be positive");
  require_distinct(points);
  const std::size_t n = points.size();
  const Bitset removed = to_set(n, remove_N);
  if (auto hit = find_cospherical(points, removed.complement(), k, allow_planes, options.engine.execution)) {
    std::string s;
    for (auto i : *hit) s += (s.empty() ? "" : ",") + std::to_string(i);
    throw PreconditionViolated("points {" + s + "} remain on a common sphere");
  }
  auto iso = isometry_group(points, options.aut_cap);
  auto out = run_subset_instance(
      n, iso.generators, iso.order, removed, k,
      [&](const Bitset& kept) { return !find_cospherical(points, kept, k, allow_planes, Execution::serial); },
      "no-common-sphere", options);
  require_all(out.clauses, "sphere_invariant_run");
  return out;
}

Relation parse_relation(const std::string& text) {
  std::istringstream in(text);
  long long n = 0;
  if (!(in >> n) || n < 0) throw ParseError("relation file: expected a candidate count");
  Relation r{static_cast<std::size_t>(n), std::vector<std::vector<bool>>(static_cast<std::size_t>(n),
                                                                           std::vector<bool>(static_cast<std::size_t>(n)))};
  for (auto& row : r.respects)
    for (std::size_t j = 0; j < row.size(); ++j) {
      std::string v;
      if (!(in >> v) || (v != "0" && v != "1"))
        throw ParseError("relation file: expected " + std::to_string(n * n) + " entries of 0 or 1");
      row[j] = v == "1";
    }
  std::string extra;
  if (in >> extra) throw ParseError("relation file: trailing data");
  return r;
}

std::size_t majority(std::size_t k) { return (k + 2) / 2; }

bool efficient_subset(const Relation& r, std::span<const std::size_t> subset, bool self_respect) {
  const std::size_t need = majority(subset.size());
  for (auto x : subset) {
    std::size_t votes = 0;
    for (auto y : subset)
      if ((y != x || self_respect) && r.respects[y][x]) ++votes;
    if (votes >= need) return true;
  }
  return false;
}

bool efficient_team_check(const Relation& r, const Ids& team, std::size_t k, bool self_respect, Execution exec) {
  for (auto i : team)
    if (i >= r.n) throw PreconditionViolated("candidate " + std::to_string(i) + " out of range");
  if (team.size() < k) return true;
  return !first_subset(
              team, k, [&](std::span<const std::size_t> pick) { return !efficient_subset(r, pick, self_respect); },
              exec)
              .has_value();
}

Predicate team_predicate(const Relation& r, std::size_t k, bool self_respect) {
  std::vector<Ids> bad;
  for_each_combination(r.n, k, [&](std::span<const std::size_t> pick) {
    if (!efficient_subset(r, pick, self_respect)) bad.emplace_back(pick.begin(), pick.end());
    return true;
  });
  return forbidden_subset_predicate("team", k, std::move(bad));
}

graph::AutomorphismGroup relation_automorphisms(const Relation& r, std::size_t cap) {
  std::vector<graph::Vertex> vs;
  std::vector<graph::Edge> es;
  for (std::size_t i = 0; i < r.n; ++i) vs.push_back({static_cast<int>(i), std::nullopt});
  for (std::size_t y = 0; y < r.n; ++y)
    for (std::size_t x = 0; x < r.n; ++x)
      if (r.respects[y][x]) es.push_back({static_cast<int>(es.size()), static_cast<int>(y), static_cast<int>(x), std::nullopt});
  return graph::automorphism_group(graph::Graph(true, vs, es), cap);
}

SubsetRunResult team_invariant_run(const Relation& r, const Ids& expel_N, std::size_t k, bool self_respect,
                                   const RunOptions& options) {
  if (k == 0) throw PreconditionViolated("team_invariant_run: k must be positive");
  const Bitset removed = to_set(r.n, expel_N);
  if (!efficient_team_check(r, to_ids(removed.complement()), k, self_respect, options.engine.execution))
    throw PreconditionViolated("the team left after the seed expulsion is not efficient");
  auto aut = relation_automorphisms(r, options.aut_cap);
  auto out = run_subset_instance(
      r.n, aut.generators, aut.order, removed, k,
      [&](const Bitset& kept) { return efficient_team_check(r, to_ids(kept), k, self_respect, Execution::serial); },
      "efficient", options);
  const Rational bound = iterate_f(Rational(static_cast<long>(removed.count())), k - 1);
  const bool big = Rational(static_cast<long>(r.n)) > bound;
  out.clauses.push_back({"nonempty-when-large", !big || !out.engine.H.empty(), ""});
  require_all(out.clauses, "team_invariant_run");
  return out;
}

}  // namespace symm::geomset
