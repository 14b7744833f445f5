#include "symm/core/predicates.hpp"

#include <algorithm>
#include <stdexcept>

namespace symm {

namespace {

// Kuhn's augmenting path from position `pos`; owner[m] is the position
// holding member m, or the arity when free.
constexpr std::size_t kMaxSubsetArity = 64;

bool augment(std::size_t pos, const std::vector<std::size_t>& members, std::span<const Element> args,
             std::size_t* owner, bool* seen) {
  for (std::size_t m = 0; m < members.size(); ++m) {
    if (seen[m] || !args[pos].test(members[m])) continue;
    seen[m] = true;
    if (owner[m] == members.size() || augment(owner[m], members, args, owner, seen)) {
      owner[m] = pos;
      return true;
    }
  }
  return false;
}

}  // namespace

Predicate forbidden_tuple_predicate(std::string id, std::size_t arity,
                                    std::vector<std::vector<std::size_t>> tuples) {
  for (const auto& t : tuples)
    if (t.size() != arity) throw std::invalid_argument("forbidden tuple has the wrong length");
  Predicate p;
  p.id = std::move(id);
  p.arity = arity;
  p.eval = [tuples = std::move(tuples)](std::span<const Element> args) {
    for (const auto& t : tuples) {
      bool hit = true;
      for (std::size_t i = 0; i < t.size() && hit; ++i) hit = args[i].test(t[i]);
      if (hit) return false;
    }
    return true;
  };
  return p;
}

Predicate forbidden_subset_predicate(std::string id, std::size_t arity,
                                     std::vector<std::vector<std::size_t>> subsets) {
  if (arity > kMaxSubsetArity) throw std::invalid_argument("forbidden subset arity above 64");
  for (auto& s : subsets) {
    if (s.size() != arity) throw std::invalid_argument("forbidden subset has the wrong size");
    std::sort(s.begin(), s.end());
  }
  Predicate p;
  p.id = std::move(id);
  p.arity = arity;
  p.eval = [subsets = std::move(subsets), arity](std::span<const Element> args) {
    // A forbidden subset is hit iff positions and members admit a perfect
    // matching with member x usable at position i when x is in args[i].
    std::size_t owner[kMaxSubsetArity];
    bool seen[kMaxSubsetArity];
    for (const auto& s : subsets) {
      std::fill(owner, owner + arity, arity);
      bool perfect = true;
      for (std::size_t pos = 0; pos < arity && perfect; ++pos) {
        std::fill(seen, seen + arity, false);
        perfect = augment(pos, s, args, owner, seen);
      }
      if (perfect) return false;
    }
    return true;
  };
  return p;
}

}  // namespace symm
