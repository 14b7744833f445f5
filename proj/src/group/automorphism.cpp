#include "symm/group/automorphism.hpp"

#include <optional>
#include <set>
#include <string>

namespace symm::group {

namespace {

// Extends images of the generating set along the Cayley graph; nullopt on an
// inconsistency or a non-bijective result.
std::optional<Permutation> extend(const FiniteGroup& g, const std::vector<std::uint32_t>& gens,
                                  const std::vector<std::uint32_t>& images) {
  const auto n = static_cast<std::uint32_t>(g.order());
  Permutation map(n, n);
  map[g.identity()] = g.identity();
  std::vector<std::uint32_t> work{g.identity()};
  while (!work.empty()) {
    auto x = work.back();
    work.pop_back();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      auto y = g.mul(x, gens[i]);
      auto fy = g.mul(map[x], images[i]);
      if (map[y] == n) {
        map[y] = fy;
        work.push_back(y);
      } else if (map[y] != fy) {
        return std::nullopt;
      }
    }
  }
  if (!is_permutation(map) || !is_group_automorphism(g, map)) return std::nullopt;
  return map;
}

}  // namespace

bool is_group_automorphism(const FiniteGroup& g, const Permutation& p) {
  if (p.size() != g.order() || !is_permutation(p)) return false;
  for (std::uint32_t a = 0; a < g.order(); ++a)
    for (std::uint32_t b = 0; b < g.order(); ++b)
      if (p[g.mul(a, b)] != g.mul(p[a], p[b])) return false;
  return true;
}

bool is_characteristic(const Subgroup& s, const std::vector<Permutation>& auts) {
  for (const auto& p : auts)
    if (apply_permutation(p, s) != s) return false;
  return true;
}

GroupAutomorphisms group_automorphisms(const FiniteGroup& g, std::size_t order_cap, std::size_t cap) {
  if (g.order() > order_cap)
    throw CapExceeded("automorphism search limited to groups of order <= " + std::to_string(order_cap));
  GroupAutomorphisms out;
  Subgroup span = g.trivial();
  for (std::uint32_t x = 0; x < g.order(); ++x)
    if (!span.test(x)) {
      out.generating_set.push_back(x);
      Bitset gens(g.order());
      for (auto y : out.generating_set) gens.set(y);
      span = generate(g, gens);
    }
  const auto& gens = out.generating_set;

  std::vector<std::vector<std::uint32_t>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::uint32_t y = 0; y < g.order(); ++y)
      if (g.element_order(y) == g.element_order(gens[i])) candidates[i].push_back(y);

  std::vector<Permutation> all;
  std::vector<std::uint32_t> images(gens.size());
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == gens.size()) {
      if (auto p = extend(g, gens, images)) {
        all.push_back(std::move(*p));
        if (all.size() > cap) throw CapExceeded("more than " + std::to_string(cap) + " automorphisms");
      }
      return;
    }
    for (auto y : candidates[i]) {
      images[i] = y;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  out.order = static_cast<unsigned long>(all.size());

  // Keep an automorphism as a generator iff it lies outside the group
  // generated so far.
  const Permutation id = identity_permutation(g.order());
  std::set<Permutation> closure{id};
  for (const auto& p : all) {
    if (closure.count(p)) continue;
    out.generators.push_back(p);
    std::vector<Permutation> work(closure.begin(), closure.end());
    while (!work.empty()) {
      auto q = work.back();
      work.pop_back();
      for (const auto& gen : out.generators) {
        auto r = compose(gen, q);
        if (closure.insert(r).second) work.push_back(r);
      }
    }
  }
  return out;
}

}  // namespace symm::group
