#pragma once

#include <cstddef>
#include <vector>

#include "symm/core/codim.hpp"
#include "symm/group/group.hpp"

namespace symm::group {

inline constexpr std::size_t kDefaultGroupOrderCap = 128;
inline constexpr std::size_t kDefaultAutomorphismCap = 100000;

struct GroupAutomorphisms {
  std::vector<Permutation> generators;  // element-id permutations
  Integer order = 1;
  std::vector<std::uint32_t> generating_set;  // the elements whose images were searched
};

/// Aut(G) by mapping a greedy generating set to every tuple of images of
/// matching element orders and keeping the tuples that extend to a
/// bijective homomorphism. Throws CapExceeded when |G| exceeds order_cap or
/// more than `cap` automorphisms are found.
GroupAutomorphisms group_automorphisms(const FiniteGroup& g, std::size_t order_cap = kDefaultGroupOrderCap,
                                       std::size_t cap = kDefaultAutomorphismCap);

bool is_group_automorphism(const FiniteGroup& g, const Permutation& p);

/// True when every generator maps s onto itself.
bool is_characteristic(const Subgroup& s, const std::vector<Permutation>& auts);

}  // namespace symm::group
