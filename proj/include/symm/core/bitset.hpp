#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace symm {

/// Fixed-universe bitset. Every shipped lattice element is a subset of some
/// finite ground set (edges, group elements, points, candidates), so this is
/// also the engine's element handle. The word vector is the canonical form:
/// two bitsets over the same universe are equal iff their words are equal.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t universe);
  Bitset(std::size_t universe, std::initializer_list<std::size_t> members);
  static Bitset from_indices(std::size_t universe, std::span<const std::size_t> members);
  static Bitset full(std::size_t universe);

  std::size_t universe() const { return universe_; }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const;
  bool empty() const;
  bool is_full() const { return count() == universe_; }
  bool subset_of(const Bitset& other) const;
  bool intersects(const Bitset& other) const;

  Bitset operator|(const Bitset& o) const;
  Bitset operator&(const Bitset& o) const;
  Bitset operator-(const Bitset& o) const;
  Bitset complement() const;
  Bitset& operator|=(const Bitset& o);
  Bitset& operator&=(const Bitset& o);

  std::vector<std::size_t> indices() const;
  std::span<const std::uint64_t> words() const { return words_; }
  std::uint64_t hash() const;
  /// "{0,3,5}"
  std::string to_string() const;

  friend bool operator==(const Bitset&, const Bitset&) = default;
  friend std::strong_ordering operator<=>(const Bitset& a, const Bitset& b);

 private:
  void trim();

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

inline std::ostream& operator<<(std::ostream& os, const Bitset& b) { return os << b.to_string(); }

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return static_cast<std::size_t>(b.hash()); }
};

/// Engine-facing name for a lattice element.
using Element = Bitset;

/// A permutation of {0..n-1}, stored as its image list.
using Permutation = std::vector<std::uint32_t>;

Bitset apply_permutation(const Permutation& p, const Bitset& s);
bool is_permutation(const Permutation& p);
Permutation compose(const Permutation& outer, const Permutation& inner);
Permutation inverse(const Permutation& p);
Permutation identity_permutation(std::size_t n);

}  // namespace symm
