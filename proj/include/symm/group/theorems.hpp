#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "symm/core/engine.hpp"
#include "symm/core/verification.hpp"
#include "symm/group/automorphism.hpp"
#include "symm/group/classes.hpp"
#include "symm/group/words.hpp"

namespace symm::group {

/// Normal subgroups of g ordered by inclusion: join = product, meet =
/// intersection, codim = log2 of the index, generators = automorphisms.
class NormalSubgroupLattice : public LatticeInstance {
 public:
  NormalSubgroupLattice(std::shared_ptr<const FiniteGroup> g, std::vector<Permutation> automorphisms);
  bool leq(const Element& a, const Element& b) const override { return a.subset_of(b); }
  Element join(const Element& a, const Element& b) const override;
  Element meet(const Element& a, const Element& b) const override { return a & b; }
  Codim codim(const Element& a) const override;
  std::size_t generator_count() const override { return auts_.size(); }
  Element apply(std::size_t i, const Element& a) const override { return apply_permutation(auts_[i], a); }
  std::optional<Element> top() const override { return g_->whole(); }
  const FiniteGroup& group() const { return *g_; }

 private:
  std::shared_ptr<const FiniteGroup> g_;
  std::vector<Permutation> auts_;
};

/// log2 |A|, the codimension used on the dual lattice.
Codim log2_order(const Subgroup& a);
Codim log2_index(const FiniteGroup& g, const Subgroup& a);

struct VerbalCondition {
  OuterCommutatorWord word;
  ClassTester tester;
};

/// P(K_1..K_t) = every condition's w(K_1..K_{weight}) lies in its class.
Predicate verbal_predicate(std::shared_ptr<const FiniteGroup> g, std::vector<VerbalCondition> conditions);

/// Aut-core of N: the intersection of its images under the whole group.
Subgroup automorphism_core(const Subgroup& n, const std::vector<Permutation>& auts);

struct GroupRunOptions {
  std::size_t order_cap = kDefaultGroupOrderCap;
  EngineOptions engine;
};

struct GroupRunResult {
  Subgroup H;
  EngineResult engine;
  std::vector<Clause> clauses;
  GroupAutomorphisms aut;
  std::size_t arity = 0;
};

/// Characteristic subgroup H with every verbal condition, from a normal N
/// that already has them. Clauses: characteristic, one per condition,
/// index bound, and G/H in the formation generated by G/N (checked as the
/// Aut-core of N lying in H).
GroupRunResult khm_run(const FiniteGroup& g, const Subgroup& n, const std::vector<VerbalCondition>& conditions,
                       const GroupRunOptions& options = {});

/// Element orders of G/K, ascending.
std::set<std::uint64_t> spectrum_of_quotient(const FiniteGroup& g, const Subgroup& k);

/// P(K_1..K_t) = for every x some i has x^{n_i} in K_i.
Predicate spectrum_predicate(std::shared_ptr<const FiniteGroup> g, std::vector<std::uint64_t> orders);

/// Characteristic H with spectrum(G/H) within spectrum(G/N) and
/// log2|H| <= f^{t-1}(log2|N|), via the engine on the dual lattice.
GroupRunResult spectrum_run(const FiniteGroup& g, const Subgroup& n, const GroupRunOptions& options = {});

/// One layer of a normal series: either an outer commutator identity on
/// the quotient or membership in a class.
struct LayerRequirement {
  std::optional<OuterCommutatorWord> word;
  std::optional<ClassTester> tester;
  std::string to_string() const;
};

LayerRequirement word_layer(const std::string& word);
LayerRequirement class_layer(const std::string& tag);

/// Whether a/b (b normal in a) meets the requirement.
bool layer_holds(const FiniteGroup& g, const LayerRequirement& r, const Subgroup& a, const Subgroup& b);

/// A chain 1 = A_0 <= ... <= A_n = N of G-normal subgroups with A_i/A_{i-1}
/// meeting spec[i-1], by exhaustive search; nullopt if none. Throws
/// CapExceeded when |G| exceeds order_cap.
std::optional<std::vector<Subgroup>> find_normal_series(const FiniteGroup& g, const Subgroup& n,
                                                        const std::vector<LayerRequirement>& spec,
                                                        std::size_t order_cap = kDefaultGroupOrderCap);
bool series_predicate(const FiniteGroup& g, const Subgroup& n, const std::vector<LayerRequirement>& spec,
                      std::size_t order_cap = kDefaultGroupOrderCap);

/// The series property written as a multilinear monotone predicate by
/// composing layer predicates bottom-up; arity is the product of word
/// weights (classes count as weight 1).
Predicate series_composed_predicate(std::shared_ptr<const FiniteGroup> g, const std::vector<LayerRequirement>& spec);

/// Characteristic H having a normal series of the same shape, with
/// log2|G:H| <= f^{t-1}(log2|G:N|).
GroupRunResult series_run(const FiniteGroup& g, const Subgroup& n, const std::vector<LayerRequirement>& spec,
                          const GroupRunOptions& options = {});

}  // namespace symm::group
