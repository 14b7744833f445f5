#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>

#include "symm/core/codim.hpp"
#include "symm/core/errors.hpp"
#include "symm/core/kernels.hpp"
#include "symm/geomset/instances.hpp"
#include "symm/geomset/points.hpp"
#include "symm/oracle/sphere.hpp"

using namespace symm;
using namespace symm::geomset;
using symm::oracle::sphere_oracle;

namespace {

PointSet pts(std::initializer_list<std::array<long, 3>> xs) {
  PointSet out;
  for (auto& p : xs) out.push_back(point(p[0], p[1], p[2]));
  return out;
}

// Brute-force order of the isometry group: every permutation against the
// distance matrix.
long brute_isometries(const PointSet& p) {
  Permutation perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  long count = 0;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < p.size() && ok; ++i)
      for (std::size_t j = 0; j < p.size() && ok; ++j)
        ok = squared_distance(p[i], p[j]) == squared_distance(p[perm[i]], p[perm[j]]);
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

PointSet random_points(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> c(lo, hi);
  PointSet out;
  while (out.size() < n) {
    auto q = point(c(rng), c(rng), c(rng));
    if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
  }
  return out;
}

Relation relation(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& respects) {
  Relation r{n, std::vector<std::vector<bool>>(n, std::vector<bool>(n))};
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x) r.respects[y][x] = respects(y, x);
  return r;
}

bool invariant(const std::vector<Permutation>& gens, std::size_t n, const Ids& removed) {
  auto s = Bitset::from_indices(n, removed);
  for (auto& g : gens)
    if (apply_permutation(g, s) != s) return false;
  return true;
}

}  // namespace

TEST(Points, ParseAcceptsIntegersAndFractions) {
  auto p = parse_points("# comment\n1 2 3\n\n1/2 -3/4 0\n");
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p[1].x, Rational(1, 2));
  EXPECT_EQ(p[1].y, Rational(-3, 4));
  EXPECT_THROW(parse_points("1 2"), ParseError);
  EXPECT_THROW(parse_points("1/0 2 3"), ParseError);
  EXPECT_THROW(require_distinct(pts({{0, 0, 0}, {0, 0, 0}})), DuplicatePoints);
}

TEST(Points, IsometryExamples) {
  EXPECT_EQ(isometry_group(pts({{0, 0, 0}, {4, 0, 0}, {0, 3, 0}})).order, 1);
  EXPECT_EQ(isometry_group(pts({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}})).order, 8);
  EXPECT_EQ(isometry_group(pts({{5, 5, 5}})).order, 1);
}

TEST(Points, IsometriesMatchBruteForceAndPreserveDistances) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    auto p = random_points(rng, 3 + trial % 4, -1, 1);
    auto g = isometry_group(p);
    EXPECT_EQ(g.order, brute_isometries(p)) << "trial " << trial;
    for (auto& gen : g.generators)
      for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j)
          EXPECT_EQ(squared_distance(p[i], p[j]), squared_distance(p[gen[i]], p[gen[j]]));
  }
  auto cube = pts({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
  EXPECT_EQ(isometry_group(cube).order, 48);
}

TEST(Points, CommonSphereExamples) {
  EXPECT_TRUE(on_common_sphere(pts({{0, 0, 0}, {3, 1, 4}})));
  EXPECT_TRUE(on_common_sphere(pts({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}})));
  // Four non-coplanar unit-sphere points pin the sphere; (0,0,2) is off it.
  EXPECT_FALSE(on_common_sphere(pts({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, 2}})));
  // With the four taken on the equator the sphere is not pinned: centre (0,0,3/4).
  EXPECT_TRUE(on_common_sphere(pts({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 2}})));
  // Collinear triples lie on a line, never on a sphere, but do lie on a plane.
  EXPECT_FALSE(on_common_sphere(pts({{0, 0, 0}, {1, 0, 0}, {2, 0, 0}})));
  EXPECT_TRUE(on_common_sphere(pts({{0, 0, 0}, {1, 0, 0}, {2, 0, 0}}), true));
  // Four coplanar points not on a circle: a plane but no sphere.
  auto kite = pts({{0, 0, 0}, {2, 0, 0}, {0, 1, 0}, {5, 5, 0}});
  EXPECT_FALSE(on_common_sphere(kite));
  EXPECT_TRUE(on_common_sphere(kite, true));
}

TEST(Points, CommonSphereAgreesWithGeometricOracle) {
  std::mt19937_64 rng(11);
  int spheres = 0, planes = 0;
  for (int trial = 0; trial < 600; ++trial) {
    std::size_t k = 2 + trial % 6;  // 2..7 points
    auto p = random_points(rng, k, -1, 1);
    auto o = sphere_oracle(p);
    ASSERT_EQ(on_common_sphere(p), o.sphere) << "trial " << trial;
    ASSERT_EQ(on_common_sphere(p, true), o.sphere || o.coplanar) << "trial " << trial;
    spheres += o.sphere;
    planes += o.coplanar;
  }
  // The small coordinate range makes both degenerate outcomes common.
  EXPECT_GT(spheres, 50);
  EXPECT_GT(planes, 50);
}

TEST(Points, CosphericalSubsetsMatchOracle) {
  std::mt19937_64 rng(3);
  auto p = random_points(rng, 8, -1, 1);
  auto subs = cospherical_subsets(p, 4);
  std::vector<Ids> expected;
  for_each_combination(p.size(), 4, [&](std::span<const std::size_t> s) {
    PointSet q;
    for (auto i : s) q.push_back(p[i]);
    if (sphere_oracle(q).sphere) expected.emplace_back(s.begin(), s.end());
    return true;
  });
  EXPECT_EQ(subs, expected);
}

TEST(SphereRun, AlreadyFreeGivesEmptyRemoval) {
  // Four non-coplanar points; no 5 exist at all.
  auto p = pts({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  auto r = sphere_invariant_run(p, {}, 5);
  EXPECT_TRUE(r.removed_H.empty());
}

TEST(SphereRun, OctahedronAntipodalPair) {
  auto oct = pts({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
  auto r = sphere_invariant_run(oct, {4, 5}, 5);
  EXPECT_EQ(r.group_order, 48);
  EXPECT_TRUE(invariant(r.generators, oct.size(), r.removed_H));
  EXPECT_TRUE(all_ok(r.clauses));
  // The remaining points have no 5 on a sphere, checked exhaustively.
  auto kept = Bitset::from_indices(oct.size(), r.removed_H).complement().indices();
  for_each_combination(kept.size(), 5, [&](std::span<const std::size_t> s) {
    PointSet q;
    for (auto i : s) q.push_back(oct[kept[i]]);
    EXPECT_FALSE(sphere_oracle(q).sphere);
    return true;
  });
  EXPECT_LE(Rational(static_cast<long>(r.removed_H.size())), iterate_f(Rational(2), 4));
}

TEST(SphereRun, SeedMustAchieveProperty) {
  auto oct = pts({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
  EXPECT_THROW(sphere_invariant_run(oct, {5}, 5), PreconditionViolated);
}

TEST(SphereRun, RandomBoundsAndInvariance) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t n = 5 + trial % 4;
    auto p = random_points(rng, n, -1, 1);
    // Greedy seed: remove the last point of each cospherical 4-subset left.
    Bitset kept = Bitset::full(n);
    while (auto hit = find_cospherical(p, kept, 4, false, Execution::serial)) kept.reset(hit->back());
    Ids seed = kept.complement().indices();
    auto r = sphere_invariant_run(p, seed, 4);
    EXPECT_TRUE(invariant(r.generators, n, r.removed_H));
    EXPECT_LE(Rational(static_cast<long>(r.removed_H.size())), iterate_f(Rational(static_cast<long>(seed.size())), 3));
    auto left = Bitset::from_indices(n, r.removed_H).complement();
    EXPECT_FALSE(find_cospherical(p, left, 4, false, Execution::serial).has_value());
  }
}

TEST(SphereRun, FindCosphericalSerialMatchesParallel) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    auto p = random_points(rng, 9, -2, 2);
    auto kept = Bitset::full(p.size());
    EXPECT_EQ(find_cospherical(p, kept, 4, false, Execution::serial),
              find_cospherical(p, kept, 4, false, Execution::parallel));
  }
}

TEST(Team, MajorityThreshold) {
  EXPECT_EQ(majority(5), 3u);
  EXPECT_EQ(majority(3), 2u);
  EXPECT_EQ(majority(4), 3u);
}

TEST(Team, Examples) {
  auto r0 = relation(8, [](std::size_t, std::size_t x) { return x == 0; });
  EXPECT_TRUE(efficient_team_check(r0, {1, 2, 3}, 5));
  EXPECT_TRUE(efficient_team_check(r0, {0, 1, 2, 3, 4}, 5));
  EXPECT_TRUE(efficient_team_check(r0, {0, 3, 4, 6, 7}, 5, false));
  EXPECT_FALSE(efficient_team_check(r0, {1, 2, 3, 4, 5}, 5));
  auto none = relation(8, [](std::size_t, std::size_t) { return false; });
  EXPECT_FALSE(efficient_team_check(none, {0, 1, 2, 3, 4}, 5));
  EXPECT_FALSE(efficient_team_check(none, {0, 1, 2, 3, 4, 5, 6, 7}, 5));
}

TEST(Team, SelfRespectFlag) {
  // Candidate 0 is respected by 1 and by themself only.
  auto r = relation(5, [](std::size_t y, std::size_t x) { return x == 0 && y <= 1; });
  std::vector<std::size_t> three{0, 1, 2};
  EXPECT_TRUE(efficient_subset(r, three, true));
  EXPECT_FALSE(efficient_subset(r, three, false));
}

TEST(Team, ParseRelation) {
  auto r = parse_relation("3\n0 1 0\n0 0 1\n1 0 0\n");
  EXPECT_EQ(r.n, 3u);
  EXPECT_TRUE(r.respects[0][1]);
  EXPECT_FALSE(r.respects[1][0]);
  EXPECT_THROW(parse_relation("2\n0 1\n"), ParseError);
}

TEST(Team, PlantedInstance) {
  auto r = relation(12, [](std::size_t, std::size_t x) { return x <= 6; });
  EXPECT_FALSE(efficient_team_check(r, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}, 5));
  auto res = team_invariant_run(r, {7, 8}, 5);
  EXPECT_EQ(res.removed_H, (Ids{7, 8, 9, 10, 11}));
  EXPECT_TRUE(invariant(res.generators, 12, res.removed_H));
  EXPECT_LE(Rational(static_cast<long>(res.removed_H.size())), iterate_f(Rational(2), 4));
  EXPECT_TRUE(efficient_team_check(r, {0, 1, 2, 3, 4, 5, 6}, 5));
  EXPECT_TRUE(all_ok(res.clauses));
}

TEST(Team, AsymmetricRelationKeepsSeed) {
  // A transitive tournament has no non-trivial automorphism.
  auto r = relation(7, [](std::size_t y, std::size_t x) { return x < y; });
  EXPECT_EQ(relation_automorphisms(r).order, 1);
  Bitset kept = Bitset::full(7);
  while (!efficient_team_check(r, kept.indices(), 5, true, Execution::serial)) {
    auto bad = first_subset(kept.indices(), 5, [&](std::span<const std::size_t> s) {
      return !efficient_subset(r, s, true);
    }, Execution::serial);
    kept.reset(bad->back());
  }
  Ids seed = kept.complement().indices();
  auto res = team_invariant_run(r, seed, 5);
  EXPECT_EQ(res.removed_H, seed);
}

TEST(Team, SeedMustLeaveEfficientTeam) {
  auto none = relation(6, [](std::size_t, std::size_t) { return false; });
  EXPECT_THROW(team_invariant_run(none, {0}, 5), PreconditionViolated);
}

TEST(Team, BoundArithmetic) {
  Integer lhs = iterate_f(Rational(10), 4).get_num();
  Integer eleven15;
  mpz_ui_pow_ui(eleven15.get_mpz_t(), 11, 15);
  EXPECT_LT(lhs, eleven15 * 10);
}
