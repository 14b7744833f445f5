#pragma once

// Data-parallel kernels. Each has a serial reference kept for tests and the
// benchmark; both variants return bit-identical results.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "symm/core/lattice.hpp"

namespace symm {

enum class Execution { serial, parallel };

namespace kernels {

/// Closure of {seed} under the lattice generators, sorted canonically.
/// Throws CapExceeded once more than `cap` elements have been reached.
std::vector<Element> orbit_closure_serial(const LatticeInstance& lattice, const Element& seed, std::size_t cap);
/// Level-synchronous variant: each frontier is expanded in parallel and
/// merged serially.
std::vector<Element> orbit_closure_parallel(const LatticeInstance& lattice, const Element& seed, std::size_t cap);

using SubsetTest = std::function<bool(std::span<const std::size_t>)>;

/// Lexicographically first k-subset of `ids` (positions taken in order) on
/// which `test` holds, or nullopt.
std::optional<std::vector<std::size_t>> first_subset_serial(std::span<const std::size_t> ids, std::size_t k,
                                                            const SubsetTest& test);
/// Buckets by the first chosen position, scans buckets in parallel and keeps
/// the lowest bucket that hits.
std::optional<std::vector<std::size_t>> first_subset_parallel(std::span<const std::size_t> ids, std::size_t k,
                                                              const SubsetTest& test);

}  // namespace kernels

std::vector<Element> orbit_closure(const LatticeInstance& lattice, const Element& seed, std::size_t cap,
                                   Execution exec = Execution::parallel);

std::optional<std::vector<std::size_t>> first_subset(std::span<const std::size_t> ids, std::size_t k,
                                                     const kernels::SubsetTest& test,
                                                     Execution exec = Execution::parallel);

/// Calls `visit` on every k-combination of {0..n-1} in lexicographic order
/// until it returns false. Returns false iff stopped early.
bool for_each_combination(std::size_t n, std::size_t k,
                          const std::function<bool(std::span<const std::size_t>)>& visit);

}  // namespace symm
