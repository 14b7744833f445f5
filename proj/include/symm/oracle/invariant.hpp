#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "symm/core/lattice.hpp"

namespace symm::oracle {

inline constexpr std::size_t kDefaultOrbitUnionBudget = std::size_t{1} << 16;

struct MinInvariant {
  std::vector<Bitset> orbits;             // orbits of the ground set, by least member
  std::optional<Bitset> removed;          // nullopt when no union works
  std::size_t candidates_checked = 0;
};

/// Minimum-cardinality union of orbits of `generators` on {0..n-1} for
/// which `property(removed)` holds; ties go to the least bitset. Throws
/// CapExceeded when 2^(orbit count) exceeds `budget`.
MinInvariant brute_min_invariant(std::size_t n, std::span<const Permutation> generators,
                                 const std::function<bool(const Bitset& removed)>& property,
                                 std::size_t budget = kDefaultOrbitUnionBudget);

/// Orbits of the group generated by `generators` on {0..n-1}.
std::vector<Bitset> orbit_partition(std::size_t n, std::span<const Permutation> generators);

/// Closes `orbit` under join and meet and tests whether h is in the result.
/// Throws CapExceeded past `cap` elements.
bool sublattice_membership(const LatticeInstance& lattice, std::span<const Element> orbit, const Element& h,
                           std::size_t cap = 100000);

/// The join/meet closure itself, sorted.
std::vector<Element> generated_sublattice(const LatticeInstance& lattice, std::span<const Element> orbit,
                                          std::size_t cap = 100000);

}  // namespace symm::oracle
