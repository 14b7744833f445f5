#include "symm/core/bitset.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace symm {

namespace {
std::size_t word_count(std::size_t n) { return (n + 63) / 64; }
}  // namespace

Bitset::Bitset(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

Bitset::Bitset(std::size_t universe, std::initializer_list<std::size_t> members) : Bitset(universe) {
  for (auto m : members) set(m);
}

Bitset Bitset::from_indices(std::size_t universe, std::span<const std::size_t> members) {
  Bitset b(universe);
  for (auto m : members) b.set(m);
  return b;
}

Bitset Bitset::full(std::size_t universe) {
  Bitset b(universe);
  std::fill(b.words_.begin(), b.words_.end(), ~std::uint64_t{0});
  b.trim();
  return b;
}

void Bitset::trim() {
  if (universe_ % 64 != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }
}

std::size_t Bitset::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool Bitset::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool Bitset::subset_of(const Bitset& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

bool Bitset::intersects(const Bitset& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

Bitset Bitset::operator|(const Bitset& o) const {
  Bitset r = *this;
  r |= o;
  return r;
}

Bitset Bitset::operator&(const Bitset& o) const {
  Bitset r = *this;
  r &= o;
  return r;
}

Bitset Bitset::operator-(const Bitset& o) const {
  Bitset r = *this;
  for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] &= ~o.words_[i];
  return r;
}

Bitset Bitset::complement() const {
  Bitset r = *this;
  for (auto& w : r.words_) w = ~w;
  r.trim();
  return r;
}

Bitset& Bitset::operator|=(const Bitset& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

Bitset& Bitset::operator&=(const Bitset& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

std::vector<std::size_t> Bitset::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    std::uint64_t w = words_[wi];
    while (w) {
      out.push_back(wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

std::uint64_t Bitset::hash() const {
  std::uint64_t h = 1469598103934665603ull ^ universe_;
  for (auto w : words_) {
    h ^= w;
    h *= 1099511628211ull;
    h ^= h >> 29;
  }
  return h;
}

std::string Bitset::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto i : indices()) {
    if (!first) os << ',';
    os << i;
    first = false;
  }
  os << '}';
  return os.str();
}

std::strong_ordering operator<=>(const Bitset& a, const Bitset& b) {
  if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
  // Compare as subsets listed in increasing order: the set whose smallest
  // differing member is present sorts first. Keeps small-index sets early.
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    std::uint64_t diff = a.words_[i] ^ b.words_[i];
    if (diff) {
      std::uint64_t low = diff & (~diff + 1);
      return (a.words_[i] & low) ? std::strong_ordering::less : std::strong_ordering::greater;
    }
  }
  return std::strong_ordering::equal;
}

Bitset apply_permutation(const Permutation& p, const Bitset& s) {
  Bitset r(s.universe());
  for (auto i : s.indices()) r.set(p[i]);
  return r;
}

bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (auto x : p) {
    if (x >= p.size() || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  Permutation r(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) r[i] = outer[inner[i]];
  return r;
}

Permutation inverse(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<std::uint32_t>(i);
  return r;
}

Permutation identity_permutation(std::size_t n) {
  Permutation r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = static_cast<std::uint32_t>(i);
  return r;
}

}  // namespace symm
