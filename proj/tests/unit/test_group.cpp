#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "symm/group/automorphism.hpp"
#include "symm/group/classes.hpp"
#include "symm/group/group.hpp"
#include "symm/group/theorems.hpp"
#include "symm/group/words.hpp"

using namespace symm;
using namespace symm::group;

namespace {

// All bijections fixing the identity, checked against the table.
std::size_t brute_aut_count(const FiniteGroup& g) {
  std::vector<std::uint32_t> rest;
  for (std::uint32_t x = 0; x < g.order(); ++x)
    if (x != g.identity()) rest.push_back(x);
  std::size_t count = 0;
  do {
    Permutation p(g.order());
    p[g.identity()] = g.identity();
    std::size_t k = 0;
    for (std::uint32_t x = 0; x < g.order(); ++x)
      if (x != g.identity()) p[x] = rest[k++];
    if (is_group_automorphism(g, p)) ++count;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return count;
}

Subgroup elements_of_order_dividing(const FiniteGroup& g, std::uint32_t m) {
  Bitset s(g.order());
  for (std::uint32_t x = 0; x < g.order(); ++x)
    if (m % g.element_order(x) == 0) s.set(x);
  return s;
}

Subgroup a3(const FiniteGroup& s3) { return elements_of_order_dividing(s3, 3); }

std::uint32_t some_involution(const FiniteGroup& g) {
  for (std::uint32_t x = 0; x < g.order(); ++x)
    if (g.element_order(x) == 2) return x;
  return g.identity();
}

// Every characteristic subgroup, by testing each subgroup against every
// automorphism found by brute force.
std::vector<Subgroup> characteristic_subgroups(const FiniteGroup& g) {
  auto aut = group_automorphisms(g);
  std::vector<Subgroup> out;
  for (const auto& s : all_subgroups(g))
    if (is_characteristic(s, aut.generators)) out.push_back(s);
  return out;
}

bool is_abelian_subgroup(const FiniteGroup& g, const Subgroup& s) {
  return commutator_subgroup(g, s, s) == g.trivial();
}

const OuterCommutatorWord& commutator_word() {
  static const OuterCommutatorWord w = parse_ocw("[x1,x2]");
  return w;
}

}  // namespace

TEST(GroupLoad, TrivialAndS3) {
  auto t = load_group({{0}});
  EXPECT_EQ(t.order(), 1u);
  auto s3 = symmetric_group(3);
  EXPECT_EQ(s3.order(), 6u);
  EXPECT_FALSE(s3.is_abelian());
  auto back = parse_group_text(group_to_text(s3));
  EXPECT_EQ(back.table(), s3.table());
}

TEST(GroupLoad, CorruptedTableRejected) {
  auto table = cyclic_group(4).table();
  std::swap(table[1][1], table[1][2]);
  EXPECT_THROW(load_group(table), NotAGroup);
  auto assoc = cyclic_group(4).table();
  // Keep the identity row/column and a Latin square, break associativity.
  assoc[1] = {1, 3, 0, 2};
  assoc[3] = {3, 2, 1, 0};
  try {
    load_group(assoc);
    FAIL();
  } catch (const NotAGroup& e) {
    EXPECT_FALSE(e.axiom().empty());
  }
  EXPECT_THROW(parse_group_text("2\n0 1\n1"), ParseError);
  EXPECT_THROW(parse_group_text("2\n0 1\n1 5"), ParseError);
}

TEST(GroupLoad, Corpus) {
  std::vector<std::size_t> orders;
  for (const auto& g : small_group_corpus()) orders.push_back(g.order());
  EXPECT_EQ(orders, (std::vector<std::size_t>{2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 6, 8, 8, 12, 12, 12}));
  auto q8 = quaternion_group();
  EXPECT_EQ(elements_of_order_dividing(q8, 2).count(), 2u);  // a single involution
  EXPECT_EQ(all_normal_subgroups(alternating_group(4)).size(), 3u);
}

TEST(SubgroupOps, S3) {
  auto s3 = symmetric_group(3);
  EXPECT_EQ(generate(s3, s3.trivial()), s3.trivial());
  auto a = a3(s3);
  EXPECT_EQ(a.count(), 3u);
  EXPECT_TRUE(is_normal(s3, a));
  Subgroup t = generate(s3, Bitset(6, {some_involution(s3)}));
  EXPECT_FALSE(is_normal(s3, t));
  EXPECT_EQ(product(s3, a, t), s3.whole());
  EXPECT_EQ(intersect(a, t), s3.trivial());
  EXPECT_EQ(all_subgroups(s3).size(), 6u);
  EXPECT_EQ(all_normal_subgroups(s3).size(), 3u);
}

TEST(SubgroupOps, ProductOfNormalsIsTheSetProduct) {
  for (const auto& g : small_group_corpus()) {
    auto normals = all_normal_subgroups(g);
    for (const auto& a : normals)
      for (const auto& b : normals) {
        Bitset set(g.order());
        for (auto x : a.indices())
          for (auto y : b.indices()) set.set(g.mul(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)));
        EXPECT_EQ(product(g, a, b), set);
      }
  }
}

TEST(SubgroupOps, NormalSubgroupsMatchFilteredSubgroups) {
  for (const auto& g : small_group_corpus()) {
    std::vector<Subgroup> filtered;
    for (const auto& s : all_subgroups(g))
      if (is_normal(g, s)) filtered.push_back(s);
    EXPECT_EQ(all_normal_subgroups(g), filtered) << g.name();
  }
}

TEST(GroupAutomorphisms, SmallOrders) {
  EXPECT_EQ(group_automorphisms(cyclic_group(5)).order, 4);
  EXPECT_EQ(group_automorphisms(symmetric_group(3)).order, 6);
  EXPECT_EQ(group_automorphisms(load_group({{0}})).order, 1);
  EXPECT_EQ(group_automorphisms(quaternion_group()).order, 24);
  EXPECT_EQ(group_automorphisms(alternating_group(4)).order, 24);
  EXPECT_EQ(group_automorphisms(dihedral_group(4)).order, 8);
  EXPECT_EQ(group_automorphisms(dihedral_group(6)).order, 12);
}

TEST(GroupAutomorphisms, MatchBruteForce) {
  for (const auto& g : small_group_corpus()) {
    if (g.order() > 8) continue;
    auto a = group_automorphisms(g);
    EXPECT_EQ(a.order, brute_aut_count(g)) << g.name();
    for (const auto& p : a.generators) EXPECT_TRUE(is_group_automorphism(g, p));
  }
}

TEST(GroupAutomorphisms, CyclicIsEulerPhi) {
  for (std::size_t n = 2; n <= 12; ++n) {
    std::size_t phi = 0;
    for (std::size_t k = 1; k <= n; ++k) phi += std::gcd(k, n) == 1;
    EXPECT_EQ(group_automorphisms(cyclic_group(n)).order, phi) << n;
  }
  EXPECT_THROW(group_automorphisms(cyclic_group(12), 10), CapExceeded);
}

TEST(Words, Parse) {
  EXPECT_EQ(parse_ocw("[x1,x2]").weight(), 2u);
  auto w = parse_ocw(" [ [x1, x2] , [x3,x4] ] ");
  EXPECT_EQ(w.weight(), 4u);
  EXPECT_EQ(w.to_string(), "[[x1,x2],[x3,x4]]");
  EXPECT_THROW(parse_ocw("[x1,x1]"), VariableError);
  EXPECT_THROW(parse_ocw("[x2,x1]"), VariableError);
  EXPECT_THROW(parse_ocw("[x1,x2"), ParseError);
  EXPECT_THROW(parse_ocw("[x1;x2]"), ParseError);
  EXPECT_THROW(parse_ocw("[x1,x2]]"), ParseError);
  auto built = OuterCommutatorWord::bracket(OuterCommutatorWord::bracket(OuterCommutatorWord::variable(),
                                                                         OuterCommutatorWord::variable()),
                                            OuterCommutatorWord::variable());
  EXPECT_EQ(built.to_string(), "[[x1,x2],x3]");
}

TEST(Words, VerbalSubgroups) {
  auto c6 = cyclic_group(6);
  EXPECT_EQ(verbal_subgroup(c6, commutator_word(), {c6.whole(), c6.whole()}), c6.trivial());
  auto s3 = symmetric_group(3);
  EXPECT_EQ(verbal_subgroup(s3, commutator_word(), {s3.whole(), s3.whole()}), a3(s3));
  EXPECT_THROW(verbal_subgroup(s3, commutator_word(), {s3.whole()}), ArityMismatch);
  Subgroup t = generate(s3, Bitset(6, {some_involution(s3)}));
  EXPECT_THROW(verbal_subgroup(s3, commutator_word(), {t, s3.whole()}), NotNormal);
}

TEST(Words, DistributiveOverProducts) {
  auto g = direct_product(symmetric_group(3), symmetric_group(3));
  auto normals = all_normal_subgroups(g);
  std::vector<OuterCommutatorWord> words{parse_ocw("[x1,x2]"), parse_ocw("[[x1,x2],x3]")};
  for (const auto& w : words)
    for (const auto& a : normals)
      for (const auto& b : normals)
        for (const auto& k : normals) {
          std::vector<Subgroup> ab(w.weight(), k), wa(w.weight(), k), wb(w.weight(), k);
          ab[0] = product(g, a, b);
          wa[0] = a;
          wb[0] = b;
          EXPECT_EQ(verbal_subgroup(g, w, ab), product(g, verbal_subgroup(g, w, wa), verbal_subgroup(g, w, wb)));
        }
}

TEST(Classes, Examples) {
  auto s3 = symmetric_group(3);
  EXPECT_TRUE(class_test(s3, parse_class("solvable"), s3.whole()));
  EXPECT_FALSE(class_test(s3, parse_class("nilpotent"), s3.whole()));
  auto d4 = dihedral_group(4);
  EXPECT_TRUE(class_test(d4, parse_class("pi:2"), d4.whole()));
  EXPECT_TRUE(class_test(d4, parse_class("nilpotent"), d4.whole()));
  EXPECT_FALSE(class_test(s3, parse_class("pi:2"), s3.whole()));
  EXPECT_TRUE(class_test(s3, parse_class("trivial"), s3.trivial()));
  EXPECT_TRUE(class_test_quotient(s3, parse_class("pi:2"), s3.whole(), a3(s3)));
  EXPECT_EQ(parse_class("pi:3,2").to_string(), "pi:2,3");
  EXPECT_THROW(parse_class("abelianish"), ParseError);
  EXPECT_THROW(parse_class("pi:2,x"), ParseError);
}

TEST(Classes, RadicalAxiomsOnCorpus) {
  std::vector<ClassTester> testers{parse_class("trivial"), parse_class("solvable"), parse_class("nilpotent"),
                                   parse_class("pi:2"), parse_class("pi:3")};
  for (const auto& g : small_group_corpus()) {
    auto subs = all_subgroups(g);
    auto normals = all_normal_subgroups(g);
    for (const auto& c : testers) {
      for (const auto& n : normals) {
        if (!class_test(g, c, n)) continue;
        for (const auto& m : subs)
          if (m.subset_of(n) && is_normal_in(g, m, n)) EXPECT_TRUE(class_test(g, c, m)) << g.name() << " " << c.to_string();
        for (const auto& n2 : normals)
          if (class_test(g, c, n2)) EXPECT_TRUE(class_test(g, c, product(g, n, n2))) << g.name() << " " << c.to_string();
      }
    }
  }
}

TEST(Khm, AbelianGroupKeepsItself) {
  auto c6 = cyclic_group(6);
  auto r = khm_run(c6, c6.whole(), {{commutator_word(), parse_class("trivial")}});
  EXPECT_EQ(r.H, c6.whole());
}

TEST(Khm, S3AlternatingSubgroup) {
  auto s3 = symmetric_group(3);
  auto r = khm_run(s3, a3(s3), {{commutator_word(), parse_class("trivial")}});
  EXPECT_EQ(r.H, a3(s3));
  EXPECT_EQ(r.engine.bound, Codim(2));
  EXPECT_TRUE(all_ok(r.clauses));
}

TEST(Khm, D4Rotations) {
  auto d4 = dihedral_group(4);
  Subgroup rot(8, {0, 1, 2, 3});
  auto r = khm_run(d4, rot, {{commutator_word(), parse_class("trivial")}});
  EXPECT_EQ(r.H, rot);
  // rotations are characteristic and abelian, the largest such
  bool found = false;
  for (const auto& s : characteristic_subgroups(d4))
    if (is_abelian_subgroup(d4, s) && s.count() == 4) found = found || s == rot;
  EXPECT_TRUE(found);
}

TEST(Khm, PreconditionChecked) {
  auto s3 = symmetric_group(3);
  EXPECT_THROW(khm_run(s3, s3.whole(), {{commutator_word(), parse_class("trivial")}}), PreconditionViolated);
  Subgroup t = generate(s3, Bitset(6, {some_involution(s3)}));
  EXPECT_THROW(khm_run(s3, t, {{commutator_word(), parse_class("trivial")}}), NotNormal);
}

TEST(Khm, CorpusAgainstCharacteristicEnumeration) {
  for (const auto& g : small_group_corpus()) {
    auto chars = characteristic_subgroups(g);
    for (const auto& n : all_normal_subgroups(g)) {
      if (!is_abelian_subgroup(g, n) || g.order() / n.count() > 4) continue;
      auto r = khm_run(g, n, {{commutator_word(), parse_class("trivial")}});
      EXPECT_TRUE(std::find(chars.begin(), chars.end(), r.H) != chars.end()) << g.name();
      EXPECT_TRUE(is_abelian_subgroup(g, r.H));
      EXPECT_LE(log2_index(g, r.H), bound_step(log2_index(g, n)));
    }
  }
}

TEST(Spectrum, OfQuotient) {
  auto s3 = symmetric_group(3);
  EXPECT_EQ(spectrum_of_quotient(s3, s3.whole()), (std::set<std::uint64_t>{1}));
  EXPECT_EQ(spectrum_of_quotient(s3, a3(s3)), (std::set<std::uint64_t>{1, 2}));
  auto c6 = cyclic_group(6);
  EXPECT_EQ(spectrum_of_quotient(c6, c6.trivial()), (std::set<std::uint64_t>{1, 2, 3, 6}));
}

TEST(Spectrum, Examples) {
  auto s3 = symmetric_group(3);
  EXPECT_EQ(spectrum_run(s3, s3.trivial()).H, s3.trivial());
  auto r = spectrum_run(s3, a3(s3));
  EXPECT_EQ(r.H, a3(s3));
  auto d4 = dihedral_group(4);
  Subgroup center(8, {0, 2});
  auto rd = spectrum_run(d4, center);
  auto spec = spectrum_of_quotient(d4, rd.H);
  EXPECT_TRUE(std::includes(std::set<std::uint64_t>{1, 2}.begin(), std::set<std::uint64_t>{1, 2}.end(), spec.begin(),
                            spec.end()));
  EXPECT_EQ(rd.H, center);
}

TEST(Spectrum, WholeCorpus) {
  for (const auto& g : small_group_corpus())
    for (const auto& n : all_normal_subgroups(g)) {
      auto r = spectrum_run(g, n);
      EXPECT_TRUE(all_ok(r.clauses)) << g.name();
    }
}

TEST(Series, Examples) {
  auto s3 = symmetric_group(3);
  std::vector<LayerRequirement> ab{word_layer("[x1,x2]")};
  std::vector<LayerRequirement> abab{word_layer("[x1,x2]"), word_layer("[x1,x2]")};
  EXPECT_TRUE(series_predicate(s3, a3(s3), ab));
  EXPECT_TRUE(series_predicate(s3, s3.whole(), abab));
  EXPECT_FALSE(series_predicate(s3, s3.whole(), ab));
  auto chain = find_normal_series(s3, s3.whole(), abab);
  ASSERT_TRUE(chain.has_value());
  EXPECT_EQ(chain->size(), 3u);
  EXPECT_EQ((*chain)[1], a3(s3));
  EXPECT_TRUE(series_predicate(s3, s3.whole(), {class_layer("pi:3"), class_layer("pi:2")}));
  EXPECT_FALSE(series_predicate(s3, s3.whole(), {class_layer("pi:2"), class_layer("pi:3")}));
}

TEST(Series, ComposedPredicateAgreesWithChainSearch) {
  std::vector<std::vector<LayerRequirement>> specs{
      {word_layer("[x1,x2]")},
      {word_layer("[x1,x2]"), word_layer("[x1,x2]")},
      {class_layer("pi:3"), class_layer("pi:2")},
      {class_layer("nilpotent"), word_layer("[x1,x2]")},
  };
  std::vector<FiniteGroup> groups{symmetric_group(3), dihedral_group(4), alternating_group(4),
                                  direct_product(symmetric_group(3), cyclic_group(2))};
  for (const auto& g : groups) {
    auto gp = std::make_shared<const FiniteGroup>(g);
    for (const auto& spec : specs) {
      auto p = series_composed_predicate(gp, spec);
      for (const auto& n : all_normal_subgroups(g))
        EXPECT_EQ(eval_repeated(p, n), series_predicate(g, n, spec)) << g.name() << " " << p.id;
    }
  }
}

TEST(Series, RunProducesCharacteristicSeries) {
  auto g = direct_product(symmetric_group(3), cyclic_group(2));
  std::vector<LayerRequirement> spec{word_layer("[x1,x2]"), word_layer("[x1,x2]")};
  for (const auto& n : all_normal_subgroups(g)) {
    if (!series_predicate(g, n, spec)) continue;
    auto r = series_run(g, n, spec);
    EXPECT_TRUE(all_ok(r.clauses));
    EXPECT_EQ(r.arity, 4u);
  }
}

TEST(NormalLattice, DualCodimIsLogOrder) {
  auto s3 = std::make_shared<const FiniteGroup>(symmetric_group(3));
  auto lat = std::make_shared<NormalSubgroupLattice>(s3, group_automorphisms(*s3).generators);
  EXPECT_EQ(lat->codim(a3(*s3)), Codim(1));
  EXPECT_EQ(lat->codim(s3->trivial()), Codim::log2(Integer(6)));
  auto dual = dualize(lat, [](const Element& a) { return log2_order(a); });
  EXPECT_EQ(dual->join(a3(*s3), s3->whole()), a3(*s3));
  EXPECT_TRUE(dual->leq(s3->whole(), s3->trivial()));
}
