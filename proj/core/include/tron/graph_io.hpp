#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "tron/graph.hpp"

namespace tron {

/// {"directed": bool, "n": int, "edges": [[u,v],...], "labels": {"name": v}}
nlohmann::json to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

std::string to_json_text(const Graph& g);
Graph parse_graph_json(const std::string& text);

/// Graphviz text. Labelled vertices carry their role names in the node label.
std::string to_dot(const Graph& g, const std::string& name = "G");

}  // namespace tron
