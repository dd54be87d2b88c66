#include "tron/graph_io.hpp"

#include <sstream>
#include <vector>

namespace tron {

nlohmann::json to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  nlohmann::json labels = nlohmann::json::object();
  for (const auto& [name, v] : g.labels()) labels[name] = v;
  return {{"directed", g.directed()}, {"n", g.vertex_count()}, {"edges", std::move(edges)}, {"labels", std::move(labels)}};
}

Graph graph_from_json(const nlohmann::json& j) {
  try {
    const bool directed = j.value("directed", false);
    const auto n = j.at("n").get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InvalidInput("edge entries must be [u, v] pairs");
      edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
    }
    Labels labels;
    if (j.contains("labels")) {
      for (const auto& [name, v] : j.at("labels").items()) labels.emplace(name, v.get<Vertex>());
    }
    return Graph::build(directed, n, edges, std::move(labels));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed graph JSON: ") + e.what());
  }
}

std::string to_json_text(const Graph& g) { return to_json(g).dump(); }

Graph parse_graph_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("graph JSON parse error: ") + e.what());
  }
  return graph_from_json(j);
}

std::string to_dot(const Graph& g, const std::string& name) {
  std::vector<std::string> roles(g.vertex_count());
  for (const auto& [label, v] : g.labels()) {
    if (!roles[v].empty()) roles[v] += ",";
    roles[v] += label;
  }
  std::ostringstream out;
  const char* arrow = g.directed() ? " -> " : " -- ";
  out << (g.directed() ? "digraph " : "graph ") << name << " {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v;
    if (!roles[v].empty()) out << " [label=\"" << v << "\\n" << roles[v] << "\", shape=box]";
    out << ";\n";
  }
  for (const auto& [u, v] : g.edges()) out << "  " << u << arrow << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace tron
