#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "symm/core/bitset.hpp"
#include "symm/core/errors.hpp"

namespace symm::group {

using Table = std::vector<std::vector<std::uint32_t>>;
/// Membership bitset over element ids.
using Subgroup = Bitset;

/// Raised by load_group; names the failing axiom and a witness.
class NotAGroup : public PreconditionViolated {
 public:
  NotAGroup(std::string axiom, std::vector<std::uint32_t> witness);
  const std::string& axiom() const { return axiom_; }
  const std::vector<std::uint32_t>& witness() const { return witness_; }

 private:
  std::string axiom_;
  std::vector<std::uint32_t> witness_;
};

class FiniteGroup {
 public:
  /// Validates closure, identity, inverses and associativity.
  explicit FiniteGroup(Table table, std::string name = "");

  std::size_t order() const { return table_.size(); }
  const Table& table() const { return table_; }
  const std::string& name() const { return name_; }
  std::uint32_t identity() const { return identity_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_[a][b]; }
  std::uint32_t inv(std::uint32_t a) const { return inverse_[a]; }
  std::uint32_t pow(std::uint32_t a, std::uint64_t k) const;
  std::uint32_t element_order(std::uint32_t a) const { return orders_[a]; }
  /// a^-1 b^-1 a b
  std::uint32_t commutator(std::uint32_t a, std::uint32_t b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  bool is_abelian() const;

  Subgroup whole() const { return Bitset::full(order()); }
  Subgroup trivial() const { return Bitset(order(), {identity_}); }

 private:
  Table table_;
  std::string name_;
  std::uint32_t identity_ = 0;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> orders_;
};

FiniteGroup load_group(Table table, std::string name = "");
/// "n" on the first line, then n rows of n ids.
FiniteGroup parse_group_text(const std::string& text, std::string name = "");
std::string group_to_text(const FiniteGroup& g);

// Subgroup operations.
Subgroup generate(const FiniteGroup& g, const Bitset& elements);
Subgroup product(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
bool is_subgroup(const FiniteGroup& g, const Bitset& s);
bool is_normal(const FiniteGroup& g, const Subgroup& a);
/// Normal in `within` (itself a subgroup) rather than in g.
bool is_normal_in(const FiniteGroup& g, const Subgroup& a, const Subgroup& within);
/// Subgroup generated by [a, b] for a in A, b in B.
Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);
/// Every subgroup, canonical order. Throws CapExceeded past `cap` subgroups.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g, std::size_t cap = 100000);
std::vector<Subgroup> all_normal_subgroups(const FiniteGroup& g, std::size_t cap = 100000);
std::vector<std::uint32_t> members(const Subgroup& s);

// Small-group corpus.
FiniteGroup cyclic_group(std::size_t n);
/// Order 2n: r^i s^j has id i + n j.
FiniteGroup dihedral_group(std::size_t n);
FiniteGroup quaternion_group();
FiniteGroup symmetric_group(std::size_t n);
FiniteGroup alternating_group(std::size_t n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
/// Closure of permutation generators; identity gets id 0, the rest in
/// lexicographic order.
FiniteGroup permutation_group(const std::vector<Permutation>& gens, std::size_t degree, std::string name = "");
/// C_2..C_12, S_3, D_4, Q_8, A_4, D_6, S_3 x C_2.
std::vector<FiniteGroup> small_group_corpus();

}  // namespace symm::group
