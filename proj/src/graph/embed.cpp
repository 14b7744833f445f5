#include "symm/graph/embed.hpp"

#include <algorithm>
#include <string>

#include "symm/core/errors.hpp"

namespace symm::graph {

namespace {

constexpr std::size_t kUnmapped = static_cast<std::size_t>(-1);

class Matcher {
 public:
  Matcher(const Graph& p, const Graph& h, const std::vector<Bitset>& allowed)
      : p_(p), h_(h), allowed_(allowed), vmap_(p.vertex_count(), kUnmapped), vused_(h.vertex_count(), false),
        emap_(p.edge_count(), kUnmapped), eused_(h.edge_count(), false) {
    order_edges();
  }

  std::optional<Embedding> run() {
    if (p_.vertex_count() > h_.vertex_count() || p_.edge_count() > h_.edge_count()) return std::nullopt;
    if (!extend_edges(0)) return std::nullopt;
    Embedding out;
    for (std::size_t v = 0; v < p_.vertex_count(); ++v)
      out.vertex_map[p_.vertices()[v].id] = h_.vertices()[vmap_[v]].id;
    for (std::size_t e = 0; e < p_.edge_count(); ++e) out.edge_map[p_.edges()[e].id] = h_.edges()[emap_[e]].id;
    return out;
  }

 private:
  // Pattern edges in input order, except that once a vertex is placed we
  // prefer edges touching placed vertices; keeps the search connected.
  void order_edges() {
    std::vector<bool> done(p_.edge_count(), false), touched(p_.vertex_count(), false);
    for (std::size_t k = 0; k < p_.edge_count(); ++k) {
      std::size_t pick = kUnmapped;
      for (std::size_t e = 0; e < p_.edge_count() && pick == kUnmapped; ++e) {
        if (done[e]) continue;
        auto [a, b] = p_.ends(e);
        if (touched[a] || touched[b]) pick = e;
      }
      if (pick == kUnmapped)
        for (std::size_t e = 0; e < p_.edge_count(); ++e)
          if (!done[e]) {
            pick = e;
            break;
          }
      done[pick] = true;
      auto [a, b] = p_.ends(pick);
      touched[a] = touched[b] = true;
      order_.push_back(pick);
    }
  }

  bool vertex_ok(std::size_t pv, std::size_t hv) const {
    if (vmap_[pv] != kUnmapped) return vmap_[pv] == hv;
    if (vused_[hv]) return false;
    const auto& pc = p_.vertices()[pv].color;
    if (pc && pc != h_.vertices()[hv].color) return false;
    return p_.incident(pv).size() <= h_.incident(hv).size();
  }

  bool try_assign(std::size_t pe, std::size_t he, std::size_t a, std::size_t b, std::size_t x, std::size_t y,
                  std::size_t depth) {
    if (!vertex_ok(a, x)) return false;
    bool new_a = vmap_[a] == kUnmapped;
    if (new_a) {
      vmap_[a] = x;
      vused_[x] = true;
    }
    bool ok = vertex_ok(b, y);
    bool new_b = ok && vmap_[b] == kUnmapped;
    if (new_b) {
      vmap_[b] = y;
      vused_[y] = true;
    }
    if (ok) {
      emap_[pe] = he;
      eused_[he] = true;
      if (extend_edges(depth + 1)) return true;
      eused_[he] = false;
      emap_[pe] = kUnmapped;
    }
    if (new_b) {
      vused_[y] = false;
      vmap_[b] = kUnmapped;
    }
    if (new_a) {
      vused_[x] = false;
      vmap_[a] = kUnmapped;
    }
    return false;
  }

  bool extend_edges(std::size_t depth) {
    if (depth == order_.size()) return extend_isolated(0);
    const std::size_t pe = order_[depth];
    auto [a, b] = p_.ends(pe);
    const auto& pcolor = p_.edges()[pe].color;
    const bool loop = a == b;

    auto consider = [&](std::size_t he) {
      if (eused_[he] || !allowed_[pe].test(he)) return false;
      if (pcolor && pcolor != h_.edges()[he].color) return false;
      auto [x, y] = h_.ends(he);
      if (loop != (x == y)) return false;
      if (try_assign(pe, he, a, b, x, y, depth)) return true;
      if (!p_.directed() && !loop && try_assign(pe, he, a, b, y, x, depth)) return true;
      return false;
    };

    std::size_t anchor = vmap_[a] != kUnmapped ? vmap_[a] : vmap_[b];
    if (anchor != kUnmapped) {
      for (auto he : h_.incident(anchor))
        if (consider(he)) return true;
    } else {
      for (std::size_t he = 0; he < h_.edge_count(); ++he)
        if (consider(he)) return true;
    }
    return false;
  }

  bool extend_isolated(std::size_t from) {
    std::size_t pv = from;
    while (pv < p_.vertex_count() && vmap_[pv] != kUnmapped) ++pv;
    if (pv == p_.vertex_count()) return true;
    for (std::size_t hv = 0; hv < h_.vertex_count(); ++hv) {
      if (!vertex_ok(pv, hv)) continue;
      vmap_[pv] = hv;
      vused_[hv] = true;
      if (extend_isolated(pv + 1)) return true;
      vused_[hv] = false;
      vmap_[pv] = kUnmapped;
    }
    return false;
  }

  const Graph& p_;
  const Graph& h_;
  const std::vector<Bitset>& allowed_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> vmap_;
  std::vector<bool> vused_;
  std::vector<std::size_t> emap_;
  std::vector<bool> eused_;
};

}  // namespace

std::optional<Embedding> embed_constrained(const Graph& pattern, const Graph& host,
                                           const std::vector<Bitset>& allowed) {
  if (allowed.size() != pattern.edge_count())
    throw PreconditionViolated("embed: need one allowed set per pattern edge (" +
                               std::to_string(pattern.edge_count()) + "), got " + std::to_string(allowed.size()));
  if (pattern.directed() != host.directed())
    throw PreconditionViolated("embed: pattern and host must agree on directedness");
  for (const auto& a : allowed)
    if (a.universe() != host.edge_count()) throw PreconditionViolated("embed: allowed set over the wrong universe");
  return Matcher(pattern, host, allowed).run();
}

std::optional<Embedding> embed_constrained_ids(const Graph& pattern, const Graph& host,
                                               const std::vector<EdgeIds>& allowed) {
  std::vector<Bitset> sets;
  for (const auto& ids : allowed) sets.push_back(host.edge_set(ids));
  return embed_constrained(pattern, host, sets);
}

std::optional<Embedding> embed(const Graph& pattern, const Graph& host) {
  return embed_constrained(pattern, host, std::vector<Bitset>(pattern.edge_count(), Bitset::full(host.edge_count())));
}

}  // namespace symm::graph
