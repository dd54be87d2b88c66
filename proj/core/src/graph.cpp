#include "tron/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>

namespace tron {

VertexSet VertexSet::from(std::size_t size, std::span<const Vertex> members) {
  VertexSet s(size);
  for (Vertex v : members) s.insert(v);
  return s;
}

void VertexSet::insert(Vertex v) {
  if (v >= size_) throw InvalidInput("vertex " + std::to_string(v) + " outside set universe");
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
  if (v >= size_) return;
  words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

std::size_t VertexSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool VertexSet::intersects(const VertexSet& other) const {
  const std::size_t m = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < m; ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    auto w = words_[i];
    while (w != 0) {
      const int bit = std::countr_zero(w);
      out.push_back(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(bit)));
      w &= w - 1;
    }
  }
  return out;
}

std::size_t VertexSet::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ size_;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

Graph Graph::build(bool directed, std::size_t n, std::span<const Edge> edges, Labels labels) {
  Graph g;
  g.directed_ = directed;
  g.adjacency_.assign(n, {});
  std::set<Edge> seen;
  for (const auto& [u, v] : edges) {
    const std::string item = "(" + std::to_string(u) + "," + std::to_string(v) + ")";
    if (u >= n || v >= n) throw InvalidInput("edge " + item + " has an endpoint outside 0.." + std::to_string(n));
    if (u == v) throw InvalidInput("edge " + item + " is a self-loop");
    Edge key = directed ? Edge{u, v} : Edge{std::min(u, v), std::max(u, v)};
    if (!seen.insert(key).second) throw InvalidInput("duplicate edge " + item);
    g.adjacency_[u].push_back(v);
    if (!directed) g.adjacency_[v].push_back(u);
  }
  g.edge_count_ = seen.size();
  for (const auto& [name, v] : labels) {
    if (v >= n) throw InvalidInput("label '" + name + "' points at missing vertex " + std::to_string(v));
  }
  g.labels_ = std::move(labels);
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= adjacency_.size()) return false;
  const auto& adj = adjacency_[u];
  return std::find(adj.begin(), adj.end(), v) != adj.end();
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (directed_ || u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::optional<Vertex> Graph::find_label(const std::string& name) const {
  auto it = labels_.find(name);
  if (it == labels_.end()) return std::nullopt;
  return it->second;
}

Vertex Graph::at(const std::string& name) const {
  auto v = find_label(name);
  if (!v) throw InvalidInput("graph has no label '" + name + "'");
  return *v;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.directed_ != b.directed_ || a.vertex_count() != b.vertex_count() || a.labels_ != b.labels_) return false;
  auto ea = a.edges();
  auto eb = b.edges();
  std::sort(ea.begin(), ea.end());
  std::sort(eb.begin(), eb.end());
  return ea == eb;
}

Vertex GraphBuilder::add_vertex() { return static_cast<Vertex>(n_++); }

Vertex GraphBuilder::add_vertex(const std::string& label) {
  const Vertex v = add_vertex();
  set_label(label, v);
  return v;
}

Vertex GraphBuilder::add_vertices(std::size_t count) {
  const auto first = static_cast<Vertex>(n_);
  n_ += count;
  return first;
}

std::vector<Vertex> GraphBuilder::add_path(Vertex u, Vertex v, std::size_t length) {
  if (length == 0) throw InvalidInput("path length must be positive");
  std::vector<Vertex> interior;
  Vertex prev = u;
  for (std::size_t i = 1; i < length; ++i) {
    const Vertex w = add_vertex();
    add_edge(prev, w);
    interior.push_back(w);
    prev = w;
  }
  add_edge(prev, v);
  return interior;
}

std::vector<Vertex> GraphBuilder::add_tail(Vertex anchor, std::size_t length) {
  std::vector<Vertex> tail;
  Vertex prev = anchor;
  for (std::size_t i = 0; i < length; ++i) {
    const Vertex w = add_vertex();
    add_edge(prev, w);
    tail.push_back(w);
    prev = w;
  }
  return tail;
}

Vertex GraphBuilder::embed(const Graph& g, const std::string& label_prefix) {
  const Vertex offset = add_vertices(g.vertex_count());
  for (const auto& [u, v] : g.edges()) add_edge(offset + u, offset + v);
  for (const auto& [name, v] : g.labels()) set_label(label_prefix + name, offset + v);
  return offset;
}

void GraphBuilder::set_label(const std::string& name, Vertex v) {
  if (!labels_.emplace(name, v).second) throw InvalidInput("duplicate label '" + name + "'");
}

Graph GraphBuilder::build() const { return Graph::build(directed_, n_, edges_, labels_); }

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  return bfs_distances(g, source, VertexSet(g.vertex_count()));
}

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source, const VertexSet& blocked) {
  if (source >= g.vertex_count()) throw InvalidInput("bfs source " + std::to_string(source) + " out of range");
  std::vector<std::size_t> dist(g.vertex_count(), kUnreachable);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] != kUnreachable || blocked.contains(w)) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

Graph remove_vertices(const Graph& g, const VertexSet& removed) {
  std::vector<Vertex> remap(g.vertex_count(), 0);
  Vertex next = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!removed.contains(v)) remap[v] = next++;
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    if (!removed.contains(u) && !removed.contains(v)) edges.emplace_back(remap[u], remap[v]);
  }
  Labels labels;
  for (const auto& [name, v] : g.labels()) {
    if (!removed.contains(v)) labels.emplace(name, remap[v]);
  }
  return Graph::build(g.directed(), next, edges, std::move(labels));
}

Graph undirected_copy(const Graph& g) {
  std::set<Edge> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace(std::min(u, v), std::max(u, v));
  std::vector<Edge> list(edges.begin(), edges.end());
  return Graph::build(false, g.vertex_count(), list, g.labels());
}

}  // namespace tron
