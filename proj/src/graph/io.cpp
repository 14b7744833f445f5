#include "symm/graph/io.hpp"

#include <string>

#include "symm/core/errors.hpp"

namespace symm::graph {

namespace {

int get_int(const nlohmann::json& obj, const char* key, const char* where) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_number_integer())
    throw ParseError(std::string(where) + ": missing integer field \"" + key + "\"");
  return it->get<int>();
}

std::optional<int> get_color(const nlohmann::json& obj, const char* where) {
  auto it = obj.find("color");
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_number_integer()) throw ParseError(std::string(where) + ": color must be an integer");
  return it->get<int>();
}

}  // namespace

Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("graph: expected an object");
  bool directed = false;
  if (auto it = j.find("directed"); it != j.end()) {
    if (!it->is_boolean()) throw ParseError("graph: \"directed\" must be a boolean");
    directed = it->get<bool>();
  }
  auto vs = j.find("vertices");
  auto es = j.find("edges");
  if (vs == j.end() || !vs->is_array()) throw ParseError("graph: \"vertices\" must be an array");
  if (es == j.end() || !es->is_array()) throw ParseError("graph: \"edges\" must be an array");
  std::vector<Vertex> vertices;
  for (const auto& v : *vs) {
    if (!v.is_object()) throw ParseError("vertex: expected an object");
    vertices.push_back({get_int(v, "id", "vertex"), get_color(v, "vertex")});
  }
  std::vector<Edge> edges;
  for (const auto& e : *es) {
    if (!e.is_object()) throw ParseError("edge: expected an object");
    edges.push_back({get_int(e, "id", "edge"), get_int(e, "u", "edge"), get_int(e, "v", "edge"), get_color(e, "edge")});
  }
  return Graph(directed, std::move(vertices), std::move(edges));
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json vs = nlohmann::json::array(), es = nlohmann::json::array();
  for (const auto& v : g.vertices()) {
    nlohmann::json o{{"id", v.id}};
    if (v.color) o["color"] = *v.color;
    vs.push_back(o);
  }
  for (const auto& e : g.edges()) {
    nlohmann::json o{{"id", e.id}, {"u", e.u}, {"v", e.v}};
    if (e.color) o["color"] = *e.color;
    es.push_back(o);
  }
  return {{"directed", g.directed()}, {"vertices", vs}, {"edges", es}};
}

EdgeIds edge_ids_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("edge set: expected an array of ids");
  EdgeIds ids;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError("edge set: ids must be integers");
    ids.push_back(x.get<int>());
  }
  return normalize_ids(std::move(ids));
}

std::vector<Graph> family_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("forbidden family: expected an array of graphs");
  std::vector<Graph> out;
  for (const auto& g : j) out.push_back(graph_from_json(g));
  return out;
}

nlohmann::json embedding_to_json(const Embedding& e) {
  nlohmann::json vm = nlohmann::json::array(), em = nlohmann::json::array();
  for (const auto& [p, h] : e.vertex_map) vm.push_back({{"pattern", p}, {"host", h}});
  for (const auto& [p, h] : e.edge_map) em.push_back({{"pattern", p}, {"host", h}});
  return {{"vertex_map", vm}, {"edge_map", em}};
}

}  // namespace symm::graph
