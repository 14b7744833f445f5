#include "symm/graph/graph.hpp"

#include <algorithm>
#include <string>

#include "symm/core/errors.hpp"

namespace symm::graph {

Graph::Graph(bool directed, std::vector<Vertex> vertices, std::vector<Edge> edges)
    : directed_(directed), vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (!vertex_pos_.emplace(vertices_[i].id, i).second)
      throw PreconditionViolated("duplicate vertex id " + std::to_string(vertices_[i].id));
  incident_.resize(vertices_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto& ed = edges_[e];
    if (!edge_pos_.emplace(ed.id, e).second) throw PreconditionViolated("duplicate edge id " + std::to_string(ed.id));
    auto iu = vertex_pos_.find(ed.u), iv = vertex_pos_.find(ed.v);
    if (iu == vertex_pos_.end() || iv == vertex_pos_.end())
      throw PreconditionViolated("edge " + std::to_string(ed.id) + " references a missing vertex");
    ends_.emplace_back(iu->second, iv->second);
    incident_[iu->second].push_back(e);
    if (iv->second != iu->second) incident_[iv->second].push_back(e);
  }
}

std::size_t Graph::vertex_pos(int id) const {
  auto it = vertex_pos_.find(id);
  if (it == vertex_pos_.end()) throw PreconditionViolated("unknown vertex id " + std::to_string(id));
  return it->second;
}

std::size_t Graph::edge_pos(int id) const {
  auto it = edge_pos_.find(id);
  if (it == edge_pos_.end()) throw PreconditionViolated("unknown edge id " + std::to_string(id));
  return it->second;
}

Bitset Graph::edge_set(std::span<const int> ids) const {
  Bitset b(edges_.size());
  for (int id : ids) b.set(edge_pos(id));
  return b;
}

EdgeIds Graph::edge_ids(const Bitset& positions) const {
  EdgeIds out;
  for (auto p : positions.indices()) out.push_back(edges_[p].id);
  std::sort(out.begin(), out.end());
  return out;
}

EdgeIds Graph::all_edge_ids() const { return edge_ids(Bitset::full(edges_.size())); }

Graph Graph::restrict_edges(const Bitset& keep) const {
  std::vector<Edge> kept;
  for (auto p : keep.indices()) kept.push_back(edges_[p]);
  return Graph(directed_, vertices_, std::move(kept));
}

Graph Graph::remove_edges(std::span<const int> ids) const {
  return restrict_edges(edge_set(ids).complement());
}

Graph Graph::edge_induced(const Bitset& keep) const {
  std::vector<bool> used(vertices_.size(), false);
  std::vector<Edge> kept;
  for (auto p : keep.indices()) {
    kept.push_back(edges_[p]);
    used[ends_[p].first] = used[ends_[p].second] = true;
  }
  std::vector<Vertex> vs;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (used[i]) vs.push_back(vertices_[i]);
  return Graph(directed_, std::move(vs), std::move(kept));
}

Graph make_graph(std::size_t n, const std::vector<std::pair<int, int>>& edges, bool directed) {
  std::vector<Vertex> vs;
  for (std::size_t i = 0; i < n; ++i) vs.push_back({static_cast<int>(i), std::nullopt});
  std::vector<Edge> es;
  for (std::size_t i = 0; i < edges.size(); ++i)
    es.push_back({static_cast<int>(i), edges[i].first, edges[i].second, std::nullopt});
  return Graph(directed, std::move(vs), std::move(es));
}

Graph complete_graph(std::size_t n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < static_cast<int>(n); ++i)
    for (int j = i + 1; j < static_cast<int>(n); ++j) e.emplace_back(i, j);
  return make_graph(n, e);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < static_cast<int>(a); ++i)
    for (int j = 0; j < static_cast<int>(b); ++j) e.emplace_back(i, static_cast<int>(a) + j);
  return make_graph(a + b, e);
}

Graph cycle_graph(std::size_t n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < static_cast<int>(n); ++i) e.emplace_back(i, (i + 1) % static_cast<int>(n));
  return make_graph(n, e);
}

Graph path_graph(std::size_t n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < static_cast<int>(n); ++i) e.emplace_back(i, i + 1);
  return make_graph(n, e);
}

EdgeIds normalize_ids(EdgeIds ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

}  // namespace symm::graph
