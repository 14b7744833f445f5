#include "symm/oracle/invariant.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "symm/core/errors.hpp"

namespace symm::oracle {

std::vector<Bitset> orbit_partition(std::size_t n, std::span<const Permutation> generators) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : generators) {
    if (g.size() != n) throw PreconditionViolated("orbit_partition: generator on the wrong ground set");
    for (std::size_t i = 0; i < n; ++i) {
      auto a = find(i), b = find(g[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<Bitset> out;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto r = find(i);
    if (slot[r] == n) {
      slot[r] = out.size();
      out.emplace_back(n);
    }
    out[slot[r]].set(i);
  }
  return out;
}

MinInvariant brute_min_invariant(std::size_t n, std::span<const Permutation> generators,
                                 const std::function<bool(const Bitset& removed)>& property, std::size_t budget) {
  MinInvariant out;
  out.orbits = orbit_partition(n, generators);
  const std::size_t k = out.orbits.size();
  if (k >= 63 || (std::size_t{1} << k) > budget)
    throw CapExceeded("brute_min_invariant: " + std::to_string(k) + " orbits exceed the orbit-union budget");
  std::vector<std::pair<std::size_t, Bitset>> unions;
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    Bitset s(n);
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) s |= out.orbits[i];
    unions.emplace_back(s.count(), std::move(s));
  }
  std::sort(unions.begin(), unions.end());
  for (auto& [size, s] : unions) {
    if (out.removed && size > out.removed->count()) break;
    ++out.candidates_checked;
    if (!out.removed && property(s)) out.removed = s;
  }
  return out;
}

std::vector<Element> generated_sublattice(const LatticeInstance& lattice, std::span<const Element> orbit,
                                          std::size_t cap) {
  std::set<Element> seen;
  std::vector<Element> work;
  auto add = [&](Element e) {
    if (seen.insert(e).second) {
      if (seen.size() > cap) throw CapExceeded("sublattice closure exceeded " + std::to_string(cap) + " elements");
      work.push_back(std::move(e));
    }
  };
  for (const auto& e : orbit) add(e);
  std::vector<Element> done;
  while (!work.empty()) {
    Element x = std::move(work.back());
    work.pop_back();
    for (const auto& y : done) {
      add(lattice.join(x, y));
      add(lattice.meet(x, y));
    }
    add(lattice.join(x, x));
    add(lattice.meet(x, x));
    done.push_back(std::move(x));
  }
  return {seen.begin(), seen.end()};
}

bool sublattice_membership(const LatticeInstance& lattice, std::span<const Element> orbit, const Element& h,
                           std::size_t cap) {
  auto closure = generated_sublattice(lattice, orbit, cap);
  return std::binary_search(closure.begin(), closure.end(), h);
}

}  // namespace symm::oracle
