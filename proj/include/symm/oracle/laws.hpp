#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "symm/core/kernels.hpp"
#include "symm/core/lattice.hpp"

namespace symm::oracle {

/// Outcome of a law check. For monotonicity the counterexample is a false
/// tuple lying pointwise below the single premise, which is true. For
/// multilinearity the two premises are true tuples differing in one
/// coordinate and the counterexample is their join in that coordinate.
struct LawReport {
  std::string predicate_id;
  std::string law;  // "monotone" or "multilinear"
  std::size_t checks = 0;
  bool exhaustive = false;
  std::optional<std::vector<Element>> counterexample;
  std::vector<std::vector<Element>> premises;

  bool passed() const { return !counterexample; }
};

struct LawOptions {
  /// Exhaustive iff |universe|^arity is at most this many tuples.
  std::size_t budget = std::size_t{1} << 26;
  std::size_t samples = 20000;
  std::uint64_t seed = 0;
  Execution execution = Execution::parallel;
};

/// Unary predicates on subsets that break the laws: even cardinality is not
/// monotone, and |arg1| <= 1 is monotone but not multilinear (two
/// singletons join to a pair).
Predicate even_size_predicate();
Predicate at_most_one_predicate();

/// Every subset of {0..n-1}, in increasing bitset order.
std::vector<Element> all_subsets(std::size_t n);

/// `universe` must be the full (finite) lattice, closed under join, for an
/// exhaustive verdict to cover the whole law.
LawReport check_monotone(const LatticeInstance& lattice, const Predicate& p, std::span<const Element> universe,
                         const LawOptions& options = {});
LawReport check_multilinear(const LatticeInstance& lattice, const Predicate& p, std::span<const Element> universe,
                            const LawOptions& options = {});

/// Re-evaluates a reported counterexample; true iff it is a genuine
/// violation of the stated law (or there is none to check).
bool revalidate(const LatticeInstance& lattice, const Predicate& p, const LawReport& report);

nlohmann::json to_json(const LatticeInstance& lattice, const LawReport& report);

namespace kernels {

/// P on every tuple of `universe`^arity, mixed radix with the last
/// coordinate fastest. Entry is 1 where P holds.
std::vector<std::uint8_t> truth_table_serial(const Predicate& p, std::span<const Element> universe);
/// Splits the tuple range into contiguous blocks, one per thread.
std::vector<std::uint8_t> truth_table_parallel(const Predicate& p, std::span<const Element> universe);

}  // namespace kernels

std::vector<std::uint8_t> truth_table(const Predicate& p, std::span<const Element> universe,
                                      Execution exec = Execution::parallel);

}  // namespace symm::oracle
