#include <gtest/gtest.h>

#include <random>

#include "symm/core/engine.hpp"
#include "symm/core/errors.hpp"
#include "symm/core/predicates.hpp"
#include "symm/geomset/instances.hpp"
#include "symm/graph/families.hpp"
#include "symm/graph/forbidden.hpp"
#include "symm/graph/planarity.hpp"
#include "symm/group/group.hpp"
#include "symm/group/theorems.hpp"
#include "symm/oracle/invariant.hpp"
#include "symm/oracle/laws.hpp"

using namespace symm;
using namespace symm::oracle;

namespace {

Predicate unary(std::string id, std::function<bool(const Element&)> f, std::size_t arity = 1) {
  return Predicate{std::move(id), arity, [f](std::span<const Element> a) { return f(a[0]); }};
}

struct TriangleSetup {
  graph::Graph g;
  graph::EdgeLattice lat;
  Predicate p;
  std::vector<Element> universe;
};

TriangleSetup triangle_setup(const graph::Graph& g) {
  auto lat = graph::edge_lattice(g);
  auto p = graph::forbidden_subgraph_predicate(g, {graph::complete_graph(3)});
  return {g, lat, p, all_subsets(g.edge_count())};
}

// Hand-built lattice: 0 < 1, 2, 3 < 5; 1, 2 < 4 < 5; 3 incomparable with 4.
TableLattice crafted_lattice() {
  const std::size_t k = 6;
  std::vector<std::vector<bool>> leq(k, std::vector<bool>(k, false));
  auto up = [&](std::size_t a, std::size_t b) { leq[a][b] = true; };
  for (std::size_t i = 0; i < k; ++i) {
    up(i, i);
    up(0, i);
    up(i, 5);
  }
  up(1, 4);
  up(2, 4);
  TableLattice::Tables t;
  t.leq = leq;
  t.join.assign(k, std::vector<std::size_t>(k));
  t.meet.assign(k, std::vector<std::size_t>(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      // Least upper bound / greatest lower bound by brute force.
      std::size_t best_j = k, best_m = k;
      for (std::size_t c = 0; c < k; ++c) {
        if (leq[a][c] && leq[b][c] && (best_j == k || leq[c][best_j])) best_j = c;
        if (leq[c][a] && leq[c][b] && (best_m == k || leq[best_m][c])) best_m = c;
      }
      t.join[a][b] = best_j;
      t.meet[a][b] = best_m;
    }
  t.codim = {3, 2, 2, 2, 1, 0};
  t.top = 5;
  return TableLattice(t);
}

}  // namespace

TEST(Laws, TrianglePredicateOnFiveEdgeGraphIsMonotone) {
  // K4 minus an edge: two triangles sharing an edge.
  auto s = triangle_setup(graph::make_graph(4, {{0, 1}, {1, 2}, {2, 0}, {1, 3}, {2, 3}}));
  auto r = check_monotone(*s.lat.lattice, s.p, s.universe);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_TRUE(r.passed());
  EXPECT_GT(r.checks, 0u);
  auto m = check_multilinear(*s.lat.lattice, s.p, s.universe);
  EXPECT_TRUE(m.exhaustive);
  EXPECT_TRUE(m.passed());
}

TEST(Laws, TrianglePredicateOnK4IsMultilinear) {
  auto s = triangle_setup(graph::complete_graph(4));
  auto r = check_multilinear(*s.lat.lattice, s.p, s.universe);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_TRUE(r.passed());
}

TEST(Laws, ConstantTrueIsMonotone) {
  SubsetLattice lat(3, {});
  auto u = all_subsets(3);
  auto r = check_monotone(lat, unary("true", [](const Element&) { return true; }, 2), u);
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(r.exhaustive);
}

TEST(Laws, EvenSizeIsNotMonotone) {
  SubsetLattice lat(4, {});
  auto u = all_subsets(4);
  auto p = unary("even", [](const Element& a) { return a.count() % 2 == 0; });
  auto r = check_monotone(lat, p, u);
  ASSERT_FALSE(r.passed());
  EXPECT_TRUE(revalidate(lat, p, r));
  EXPECT_EQ((*r.counterexample)[0].count() + 1, r.premises[0][0].count());
}

TEST(Laws, SingletonOrEmptyIsNotMultilinear) {
  SubsetLattice lat(4, {});
  auto u = all_subsets(4);
  auto p = unary("small", [](const Element& a) { return a.count() <= 1; });
  EXPECT_TRUE(check_monotone(lat, p, u).passed());
  auto r = check_multilinear(lat, p, u);
  ASSERT_FALSE(r.passed());
  EXPECT_TRUE(revalidate(lat, p, r));
  EXPECT_EQ((*r.counterexample)[0].count(), 2u);
}

TEST(Laws, RevalidateRejectsFakeCounterexamples) {
  SubsetLattice lat(3, {});
  auto p = unary("small", [](const Element& a) { return a.count() <= 1; });
  LawReport fake{"small", "multilinear", 1, true, std::vector<Element>{Bitset(3, {0})}, {}};
  fake.premises = {{Bitset(3, {0})}, {Bitset(3, {1})}};
  EXPECT_FALSE(revalidate(lat, p, fake));  // the "counterexample" holds
  fake.counterexample = std::vector<Element>{Bitset(3, {0, 1, 2})};
  EXPECT_FALSE(revalidate(lat, p, fake));  // not the join of the premises
  fake.counterexample = std::vector<Element>{Bitset(3, {0, 1})};
  EXPECT_TRUE(revalidate(lat, p, fake));
}

TEST(Laws, SampledModeBeyondBudget) {
  SubsetLattice lat(4, {});
  auto u = all_subsets(4);
  LawOptions o;
  o.budget = 4;
  auto even = unary("even", [](const Element& a) { return a.count() % 2 == 0; });
  auto r = check_monotone(lat, even, u, o);
  EXPECT_FALSE(r.exhaustive);
  ASSERT_FALSE(r.passed());
  EXPECT_TRUE(revalidate(lat, even, r));
  auto s = triangle_setup(graph::complete_graph(4));
  auto m = check_multilinear(*s.lat.lattice, s.p, s.universe, o);
  EXPECT_FALSE(m.exhaustive);
  EXPECT_TRUE(m.passed());
  EXPECT_GT(m.checks, 0u);
}

TEST(Laws, ForbiddenTuplePredicatesPassRandomly) {
  std::mt19937_64 rng(5);
  SubsetLattice lat(4, {});
  auto u = all_subsets(4);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::vector<std::size_t>> tuples;
    for (int j = 0; j < 3; ++j) tuples.push_back({rng() % 4, rng() % 4});
    auto p = forbidden_tuple_predicate("pairs", 2, tuples);
    EXPECT_TRUE(check_monotone(lat, p, u).passed());
    EXPECT_TRUE(check_multilinear(lat, p, u).passed());
  }
}

TEST(Laws, SpectrumPredicateOnDualLattices) {
  for (auto make : {+[] { return group::symmetric_group(3); }, +[] { return group::dihedral_group(4); }}) {
    auto g = std::make_shared<const group::FiniteGroup>(make());
    auto auts = group::group_automorphisms(*g);
    auto base = std::make_shared<group::NormalSubgroupLattice>(g, auts.generators);
    auto dual = dualize(base, [](const Element& a) { return group::log2_order(a); });
    auto spec = group::spectrum_of_quotient(*g, g->trivial());
    auto p = group::spectrum_predicate(g, {spec.begin(), spec.end()});
    auto normals = group::all_normal_subgroups(*g);
    std::vector<Element> u(normals.begin(), normals.end());
    auto m = check_monotone(*dual, p, u);
    auto l = check_multilinear(*dual, p, u);
    EXPECT_TRUE(m.exhaustive && m.passed()) << g->name();
    EXPECT_TRUE(l.exhaustive && l.passed()) << g->name();
  }
}

TEST(Laws, TeamPredicateSmallInstances) {
  geomset::Relation none{5, std::vector<std::vector<bool>>(5, std::vector<bool>(5, false))};
  auto p = geomset::team_predicate(none, 5);
  SubsetLattice lat(5, {});
  auto u = all_subsets(5);
  auto m = check_monotone(lat, p, u);
  EXPECT_TRUE(m.exhaustive && m.passed());

  geomset::Relation top3{7, std::vector<std::vector<bool>>(7, std::vector<bool>(7, false))};
  for (auto& row : top3.respects) row[0] = row[1] = row[2] = true;
  auto q = geomset::team_predicate(top3, 3);
  SubsetLattice lat7(7, {});
  auto u7 = all_subsets(7);
  auto m7 = check_monotone(lat7, q, u7);
  auto l7 = check_multilinear(lat7, q, u7);
  EXPECT_TRUE(m7.exhaustive && m7.passed());
  EXPECT_TRUE(l7.exhaustive && l7.passed());
}

TEST(Laws, TruthTableSerialMatchesParallel) {
  auto s = triangle_setup(graph::complete_graph(4));
  EXPECT_EQ(truth_table(s.p, s.universe, Execution::serial), truth_table(s.p, s.universe, Execution::parallel));
}

TEST(Laws, ReportSerializes) {
  SubsetLattice lat(2, {});
  auto u = all_subsets(2);
  auto p = unary("even", [](const Element& a) { return a.count() % 2 == 0; });
  auto j = to_json(lat, check_monotone(lat, p, u));
  EXPECT_EQ(j["law"], "monotone");
  EXPECT_FALSE(j["passed"].get<bool>());
  EXPECT_TRUE(j.contains("counterexample"));
}

TEST(MinInvariant, K4TriangleFreeNeedsEverything) {
  auto g = graph::complete_graph(4);
  auto lat = graph::edge_lattice(g);
  auto r = brute_min_invariant(g.edge_count(), lat.edge_generators, [&](const Bitset& removed) {
    return !graph::find_forbidden(g, removed.complement(), {graph::complete_graph(3)});
  });
  EXPECT_EQ(r.orbits.size(), 1u);
  ASSERT_TRUE(r.removed);
  EXPECT_EQ(r.removed->count(), 6u);
}

TEST(MinInvariant, C6IsAlreadyTriangleFree) {
  auto g = graph::cycle_graph(6);
  auto lat = graph::edge_lattice(g);
  auto r = brute_min_invariant(g.edge_count(), lat.edge_generators, [&](const Bitset& removed) {
    return !graph::find_forbidden(g, removed.complement(), {graph::complete_graph(3)});
  });
  ASSERT_TRUE(r.removed);
  EXPECT_TRUE(r.removed->empty());
}

TEST(MinInvariant, G2PlanarizationIsNonempty) {
  auto gn = graph::gen_Gn(2);
  auto lat = graph::edge_lattice(gn.graph);
  auto planar = [&](const Bitset& removed) { return graph::planarity_test(gn.graph.restrict_edges(removed.complement())); };
  auto r = brute_min_invariant(gn.graph.edge_count(), lat.edge_generators, planar);
  ASSERT_TRUE(r.removed);
  EXPECT_GE(r.removed->count(), 2u);
  // Every orbit has at least n = 2 edges, and no smaller union works.
  for (const auto& o : r.orbits) EXPECT_GE(o.count(), 2u);
  const std::size_t k = r.orbits.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    Bitset s(gn.graph.edge_count());
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) s |= r.orbits[i];
    if (s.count() < r.removed->count()) EXPECT_FALSE(planar(s));
  }
}

TEST(MinInvariant, BudgetIsEnforced) {
  std::vector<Permutation> none;
  EXPECT_THROW(brute_min_invariant(20, none, [](const Bitset&) { return true; }, 1024), CapExceeded);
}

TEST(Sublattice, SingletonOrbit) {
  SubsetLattice lat(3, {});
  Element n = Bitset(3, {0, 2});
  std::vector<Element> orbit{n};
  EXPECT_TRUE(sublattice_membership(lat, orbit, n));
  EXPECT_FALSE(sublattice_membership(lat, orbit, Bitset(3, {0})));
}

TEST(Sublattice, K4MatchingComplementReachesBottom) {
  auto g = graph::complete_graph(4);
  auto lat = graph::edge_lattice(g);
  // Complement of the perfect matching {01, 23}: edges 02, 03, 12, 13.
  auto seed = g.edge_set(std::vector<int>{0, 1, 2, 3, 4, 5}) - g.edge_set(std::vector<int>{0, 5});
  auto orbit = orbit_closure(*lat.lattice, seed, 1000);
  EXPECT_EQ(orbit.size(), 3u);
  EXPECT_TRUE(sublattice_membership(*lat.lattice, orbit, Bitset(6)));
  auto run = engine_run(*lat.lattice, seed, 3);
  EXPECT_TRUE(run.H.empty());
  EXPECT_TRUE(sublattice_membership(*lat.lattice, orbit, run.H));
}

TEST(Sublattice, CraftedLatticeExcludesOutsider) {
  auto lat = crafted_lattice();
  std::vector<Element> orbit{lat.element(1), lat.element(2)};
  auto closure = generated_sublattice(lat, orbit);
  EXPECT_EQ(closure.size(), 4u);  // 0, 1, 2, 4
  EXPECT_TRUE(sublattice_membership(lat, orbit, lat.element(4)));
  EXPECT_TRUE(sublattice_membership(lat, orbit, lat.element(0)));
  EXPECT_FALSE(sublattice_membership(lat, orbit, lat.element(3)));
  EXPECT_FALSE(sublattice_membership(lat, orbit, lat.element(5)));
}

TEST(Sublattice, EngineOutputLiesInGeneratedSublattice) {
  // Assertion checked on every edge lattice small enough to close.
  std::mt19937_64 rng(0);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = graph::cycle_graph(3 + trial % 4);
    auto lat = graph::edge_lattice(g);
    Bitset seed = Bitset::full(g.edge_count());
    seed.reset(rng() % g.edge_count());
    auto orbit = orbit_closure(*lat.lattice, seed, 1000);
    auto run = engine_run(*lat.lattice, seed, 2 + trial % 3);
    EXPECT_TRUE(sublattice_membership(*lat.lattice, orbit, run.H));
  }
}
