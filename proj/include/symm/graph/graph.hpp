#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "symm/core/bitset.hpp"

namespace symm::graph {

struct Vertex {
  int id = 0;
  std::optional<int> color;
};

struct Edge {
  int id = 0;
  int u = 0;
  int v = 0;
  std::optional<int> color;
};

/// Sorted, duplicate-free list of edge ids.
using EdgeIds = std::vector<int>;

/// Finite graph, optionally directed and colored; loops and parallel edges
/// allowed. Ids are stable: restricting to an edge subset never renumbers.
///
/// Internally vertices and edges also have positions (0-based indices into
/// vertices()/edges()); edge subsets passed to lattice code are bitsets
/// over edge positions.
class Graph {
 public:
  Graph() = default;
  Graph(bool directed, std::vector<Vertex> vertices, std::vector<Edge> edges);

  bool directed() const { return directed_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::size_t vertex_pos(int id) const;
  std::size_t edge_pos(int id) const;
  bool has_edge_id(int id) const { return edge_pos_.count(id) != 0; }
  /// Endpoint positions of the edge at position e.
  std::pair<std::size_t, std::size_t> ends(std::size_t e) const { return ends_[e]; }
  /// Edge positions incident to vertex position v (loops listed once).
  const std::vector<std::size_t>& incident(std::size_t v) const { return incident_[v]; }

  Bitset edge_set(std::span<const int> ids) const;
  EdgeIds edge_ids(const Bitset& positions) const;
  EdgeIds all_edge_ids() const;

  /// Same vertex set, only the edges at the kept positions.
  Graph restrict_edges(const Bitset& keep) const;
  Graph remove_edges(std::span<const int> ids) const;
  /// Kept edges plus only their endpoints.
  Graph edge_induced(const Bitset& keep) const;

 private:
  bool directed_ = false;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<int, std::size_t> vertex_pos_;
  std::unordered_map<int, std::size_t> edge_pos_;
  std::vector<std::pair<std::size_t, std::size_t>> ends_;
  std::vector<std::vector<std::size_t>> incident_;
};

/// Convenience builders, vertices 0..n-1, edges numbered in listed order.
Graph make_graph(std::size_t n, const std::vector<std::pair<int, int>>& edges, bool directed = false);
Graph complete_graph(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);

EdgeIds normalize_ids(EdgeIds ids);

}  // namespace symm::graph
