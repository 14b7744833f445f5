#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symm/core/bitset.hpp"
#include "symm/core/codim.hpp"

namespace symm {

/// The engine's only view of a problem: a finite lattice with a codimension
/// and a finite list of endomorphism generators.
///
/// Contract (checked by the oracle tests, not by the engine):
///   - leq is a partial order and join is its least upper bound;
///   - meet(a, b) is a lower bound of a and b;
///   - codim is antitone, non-increasing under generators, subadditive on
///     meet, and drops by at least 1 along every strict inclusion;
///   - every generator is monotone and preserves join.
class LatticeInstance {
 public:
  virtual ~LatticeInstance() = default;

  virtual bool leq(const Element& a, const Element& b) const = 0;
  virtual Element join(const Element& a, const Element& b) const = 0;
  virtual Element meet(const Element& a, const Element& b) const = 0;
  virtual Codim codim(const Element& a) const = 0;
  virtual std::size_t generator_count() const = 0;
  virtual Element apply(std::size_t generator, const Element& a) const = 0;
  virtual std::optional<Element> top() const { return std::nullopt; }
  virtual std::string describe(const Element& a) const { return a.to_string(); }
};

using LatticePtr = std::shared_ptr<const LatticeInstance>;

/// Subsets of {0..n-1} ordered by inclusion; join is union, meet is
/// intersection, codim(S) = n - |S| (the number of removed members).
/// Generators are permutations of the ground set.
///
/// This is the finite form of the lattice of cofinite subsets used for
/// edges, points and candidates: an element records what is kept.
class SubsetLattice : public LatticeInstance {
 public:
  SubsetLattice(std::size_t n, std::vector<Permutation> generators);

  bool leq(const Element& a, const Element& b) const override { return a.subset_of(b); }
  Element join(const Element& a, const Element& b) const override { return a | b; }
  Element meet(const Element& a, const Element& b) const override { return a & b; }
  Codim codim(const Element& a) const override;
  std::size_t generator_count() const override { return generators_.size(); }
  Element apply(std::size_t g, const Element& a) const override;
  std::optional<Element> top() const override { return Bitset::full(n_); }

  std::size_t ground_size() const { return n_; }
  const std::vector<Permutation>& generators() const { return generators_; }

 private:
  std::size_t n_;
  std::vector<Permutation> generators_;
};

/// A lattice given by explicit tables over elements 0..k-1. Element i is
/// encoded as the singleton bitset {i} over a universe of k. Used for
/// hand-built test lattices.
class TableLattice : public LatticeInstance {
 public:
  struct Tables {
    std::vector<std::vector<bool>> leq;
    std::vector<std::vector<std::size_t>> join;
    std::vector<std::vector<std::size_t>> meet;
    std::vector<Rational> codim;
    std::vector<std::vector<std::size_t>> generators;  // element maps
    std::optional<std::size_t> top;
  };

  explicit TableLattice(Tables tables);

  Element element(std::size_t i) const { return Bitset(size(), {i}); }
  std::size_t index(const Element& e) const;
  std::size_t size() const { return t_.codim.size(); }

  bool leq(const Element& a, const Element& b) const override;
  Element join(const Element& a, const Element& b) const override;
  Element meet(const Element& a, const Element& b) const override;
  Codim codim(const Element& a) const override;
  std::size_t generator_count() const override { return t_.generators.size(); }
  Element apply(std::size_t g, const Element& a) const override;
  std::optional<Element> top() const override;

 private:
  Tables t_;
};

/// Order-reversed view of a lattice: leq flipped, join and meet swapped,
/// same generators, caller-supplied codimension. The base meet must be a
/// true greatest lower bound for the dual join to be a least upper bound.
class DualLattice : public LatticeInstance {
 public:
  using CodimFn = std::function<Codim(const Element&)>;

  DualLattice(LatticePtr base, CodimFn dual_codim);

  bool leq(const Element& a, const Element& b) const override { return base_->leq(b, a); }
  Element join(const Element& a, const Element& b) const override { return base_->meet(a, b); }
  Element meet(const Element& a, const Element& b) const override { return base_->join(a, b); }
  Codim codim(const Element& a) const override { return codim_(a); }
  std::size_t generator_count() const override { return base_->generator_count(); }
  Element apply(std::size_t g, const Element& a) const override { return base_->apply(g, a); }
  std::string describe(const Element& a) const override { return base_->describe(a); }

  const LatticePtr& base() const { return base_; }

 private:
  LatticePtr base_;
  CodimFn codim_;
};

LatticePtr dualize(LatticePtr lattice, DualLattice::CodimFn dual_codim);

/// Join of a nonempty family, left to right.
Element join_fold(const LatticeInstance& lattice, std::span<const Element> family);
/// Meet of a nonempty family, left to right.
Element meet_fold(const LatticeInstance& lattice, std::span<const Element> family);

/// A t-ary predicate on lattice elements. Never evaluated by the engine.
struct Predicate {
  std::string id;
  std::size_t arity = 0;
  std::function<bool(std::span<const Element>)> eval;

  bool operator()(std::span<const Element> args) const;
};

/// Convenience: evaluate P(a, ..., a) or P on a repeated pattern.
bool eval_repeated(const Predicate& p, const Element& a);

}  // namespace symm
