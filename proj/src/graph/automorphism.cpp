#include "symm/graph/automorphism.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>

#include "symm/core/errors.hpp"

namespace symm::graph {

namespace {

enum ArcKind : int { kUndirected = 0, kOut = 1, kIn = 2, kLoop = 3 };

struct Arc {
  std::uint32_t to;
  long color;
  int kind;
};

long color_key(const std::optional<int>& c) { return c ? static_cast<long>(*c) + 1 : 0; }

std::vector<std::vector<Arc>> build_arcs(const Graph& g) {
  std::vector<std::vector<Arc>> arcs(g.vertex_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.ends(e);
    long c = color_key(g.edges()[e].color);
    if (a == b) {
      arcs[a].push_back({static_cast<std::uint32_t>(a), c, kLoop});
    } else if (g.directed()) {
      arcs[a].push_back({static_cast<std::uint32_t>(b), c, kOut});
      arcs[b].push_back({static_cast<std::uint32_t>(a), c, kIn});
    } else {
      arcs[a].push_back({static_cast<std::uint32_t>(b), c, kUndirected});
      arcs[b].push_back({static_cast<std::uint32_t>(a), c, kUndirected});
    }
  }
  return arcs;
}

using Cells = std::vector<std::vector<std::uint32_t>>;
using Cert = std::vector<std::uint64_t>;

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

bool discrete(const Cells& cells) {
  return std::all_of(cells.begin(), cells.end(), [](const auto& c) { return c.size() == 1; });
}

std::size_t target_cell(const Cells& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (cells[i].size() > 1) return i;
  return cells.size();
}

class Search {
 public:
  Search(const Graph& g, std::size_t cap) : g_(g), arcs_(build_arcs(g)), cap_(cap), cell_of_(g.vertex_count()) {}

  AutomorphismGroup run() {
    AutomorphismGroup out;
    const std::size_t n = g_.vertex_count();
    if (n == 0) return out;

    // Initial partition by vertex color.
    std::map<long, std::vector<std::uint32_t>> by_color;
    for (std::size_t v = 0; v < n; ++v)
      by_color[color_key(g_.vertices()[v].color)].push_back(static_cast<std::uint32_t>(v));
    Cells root;
    for (auto& [c, members] : by_color) root.push_back(members);

    path_.push_back(root);
    certs_.push_back(refine(path_.back()));
    while (!discrete(path_.back())) {
      const auto& cur = path_.back();
      std::uint32_t v = cur[target_cell(cur)].front();
      choice_.push_back(v);
      Cells child = individualize(cur, v);
      Cert c = refine(child);
      path_.push_back(std::move(child));
      certs_.push_back(std::move(c));
    }
    for (const auto& cell : path_.back()) leaf_.push_back(cell.front());

    for (std::size_t d = choice_.size(); d-- > 0;) {
      const auto& cell = path_[d][target_cell(path_[d])];
      const std::uint32_t v = choice_[d];
      auto orbit = stabilizer_orbit(d, v);
      for (std::uint32_t w : cell) {
        if (w == v || orbit[w]) continue;
        Cells child = individualize(path_[d], w);
        if (refine(child) != certs_[d + 1]) continue;
        if (auto gamma = search(child, d + 1)) {
          gens_.push_back(std::move(*gamma));
          orbit = stabilizer_orbit(d, v);
        }
      }
      out.order *= static_cast<unsigned long>(std::count(orbit.begin(), orbit.end(), true));
    }
    // Generators were found deepest level first; present them top-down.
    std::reverse(gens_.begin(), gens_.end());
    out.generators = std::move(gens_);
    out.nodes = nodes_;
    return out;
  }

 private:
  Cells individualize(const Cells& cells, std::uint32_t v) const {
    Cells out;
    for (const auto& c : cells) {
      if (std::find(c.begin(), c.end(), v) == c.end()) {
        out.push_back(c);
        continue;
      }
      out.push_back({v});
      std::vector<std::uint32_t> rest;
      for (auto x : c)
        if (x != v) rest.push_back(x);
      if (!rest.empty()) out.push_back(std::move(rest));
    }
    return out;
  }

  /// Equitable refinement in place; returns an isomorphism-invariant
  /// certificate of the splitting history.
  Cert refine(Cells& cells) {
    Cert cert;
    using Key = std::vector<std::tuple<std::size_t, long, int>>;
    while (true) {
      for (std::size_t i = 0; i < cells.size(); ++i)
        for (auto v : cells[i]) cell_of_[v] = i;
      bool changed = false;
      Cells next;
      for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        const auto& cell = cells[ci];
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<Key, std::uint32_t>> keyed;
        for (auto v : cell) {
          Key k;
          for (const auto& a : arcs_[v]) k.emplace_back(cell_of_[a.to], a.color, a.kind);
          std::sort(k.begin(), k.end());
          keyed.emplace_back(std::move(k), v);
        }
        std::sort(keyed.begin(), keyed.end());
        std::uint64_t h = mix(0, ci);
        std::size_t start = 0;
        std::size_t groups = 0;
        for (std::size_t i = 1; i <= keyed.size(); ++i) {
          if (i == keyed.size() || keyed[i].first != keyed[start].first) {
            std::vector<std::uint32_t> sub;
            for (std::size_t j = start; j < i; ++j) sub.push_back(keyed[j].second);
            h = mix(h, sub.size());
            for (const auto& [c, col, kind] : keyed[start].first)
              h = mix(mix(mix(h, c), static_cast<std::uint64_t>(col)), static_cast<std::uint64_t>(kind));
            next.push_back(std::move(sub));
            ++groups;
            start = i;
          }
        }
        if (groups > 1) changed = true;
        cert.push_back(h);
      }
      cells = std::move(next);
      if (!changed) break;
    }
    cert.push_back(cells.size());
    return cert;
  }

  std::optional<Permutation> search(const Cells& cells, std::size_t depth) {
    if (++nodes_ > cap_) throw CapExceeded("automorphism search exceeded " + std::to_string(cap_) + " nodes");
    if (discrete(cells)) {
      Permutation perm(leaf_.size());
      for (std::size_t i = 0; i < leaf_.size(); ++i) perm[leaf_[i]] = cells[i].front();
      if (is_automorphism(g_, perm)) return perm;
      return std::nullopt;
    }
    const auto& cell = cells[target_cell(cells)];
    for (std::uint32_t u : cell) {
      Cells child = individualize(cells, u);
      if (depth + 1 >= certs_.size() || refine(child) != certs_[depth + 1]) continue;
      if (auto r = search(child, depth + 1)) return r;
    }
    return std::nullopt;
  }

  /// Orbit of v under the found generators that fix choice_[0..d) pointwise.
  std::vector<bool> stabilizer_orbit(std::size_t d, std::uint32_t v) const {
    std::vector<const Permutation*> stab;
    for (const auto& gmap : gens_) {
      bool fixes = true;
      for (std::size_t i = 0; i < d && fixes; ++i) fixes = gmap[choice_[i]] == choice_[i];
      if (fixes) stab.push_back(&gmap);
    }
    std::vector<bool> seen(g_.vertex_count(), false);
    std::vector<std::uint32_t> work{v};
    seen[v] = true;
    while (!work.empty()) {
      auto x = work.back();
      work.pop_back();
      for (const auto* p : stab) {
        auto y = (*p)[x];
        if (!seen[y]) {
          seen[y] = true;
          work.push_back(y);
        }
      }
    }
    return seen;
  }

  const Graph& g_;
  std::vector<std::vector<Arc>> arcs_;
  std::size_t cap_;
  std::size_t nodes_ = 0;
  std::vector<std::size_t> cell_of_;
  std::vector<Cells> path_;
  std::vector<Cert> certs_;
  std::vector<std::uint32_t> choice_;
  std::vector<std::uint32_t> leaf_;
  std::vector<Permutation> gens_;
};

using EdgeKey = std::tuple<std::size_t, std::size_t, long>;

EdgeKey edge_key(const Graph& g, std::size_t a, std::size_t b, std::size_t e) {
  if (!g.directed() && b < a) std::swap(a, b);
  return {a, b, color_key(g.edges()[e].color)};
}

}  // namespace

AutomorphismGroup automorphism_group(const Graph& g, std::size_t cap) { return Search(g, cap).run(); }

bool is_automorphism(const Graph& g, const Permutation& vperm) {
  if (vperm.size() != g.vertex_count() || !is_permutation(vperm)) return false;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.vertices()[v].color != g.vertices()[vperm[v]].color) return false;
  std::vector<EdgeKey> before, after;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.ends(e);
    before.push_back(edge_key(g, a, b, e));
    after.push_back(edge_key(g, vperm[a], vperm[b], e));
  }
  std::sort(before.begin(), before.end());
  std::sort(after.begin(), after.end());
  return before == after;
}

std::vector<Permutation> edge_permutations(const Graph& g, const std::vector<Permutation>& vertex_gens) {
  std::map<EdgeKey, std::vector<std::size_t>> classes;
  std::vector<std::size_t> rank(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.ends(e);
    auto& cls = classes[edge_key(g, a, b, e)];
    rank[e] = cls.size();
    cls.push_back(e);
  }
  std::vector<Permutation> out;
  for (const auto& vp : vertex_gens) {
    Permutation ep(g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      auto [a, b] = g.ends(e);
      auto it = classes.find(edge_key(g, vp[a], vp[b], e));
      if (it == classes.end() || it->second.size() <= rank[e])
        throw InvariantViolation("vertex permutation is not an automorphism");
      ep[e] = static_cast<std::uint32_t>(it->second[rank[e]]);
    }
    out.push_back(std::move(ep));
  }
  for (const auto& [key, cls] : classes) {
    if (cls.size() < 2) continue;
    Permutation swap = identity_permutation(g.edge_count());
    std::swap(swap[cls[0]], swap[cls[1]]);
    out.push_back(swap);
    if (cls.size() > 2) {
      Permutation cyc = identity_permutation(g.edge_count());
      for (std::size_t i = 0; i < cls.size(); ++i) cyc[cls[i]] = static_cast<std::uint32_t>(cls[(i + 1) % cls.size()]);
      out.push_back(cyc);
    }
  }
  return out;
}

std::vector<std::vector<std::size_t>> orbits_of(std::size_t n, const std::vector<Permutation>& gens) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& p : gens)
    for (std::size_t i = 0; i < n; ++i) {
      auto a = find(i), b = find(p[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [r, members] : groups) out.push_back(std::move(members));
  return out;
}

std::vector<EdgeIds> edge_orbits(const Graph& g, const std::vector<Permutation>& vertex_gens) {
  auto egens = edge_permutations(g, vertex_gens);
  std::vector<EdgeIds> out;
  for (const auto& orbit : orbits_of(g.edge_count(), egens)) {
    EdgeIds ids;
    for (auto p : orbit) ids.push_back(g.edges()[p].id);
    out.push_back(normalize_ids(std::move(ids)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace symm::graph
