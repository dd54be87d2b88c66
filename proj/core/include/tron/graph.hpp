#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tron {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;
using Labels = std::map<std::string, Vertex>;

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

/// Raised when a graph, rule set or construction parameter is rejected.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Fixed-universe bitset over 0..size-1.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  static VertexSet from(std::size_t size, std::span<const Vertex> members);

  std::size_t universe() const { return size_; }
  bool contains(Vertex v) const { return v < size_ && ((words_[v >> 6] >> (v & 63)) & 1U) != 0; }
  void insert(Vertex v);
  void erase(Vertex v);
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  bool intersects(const VertexSet& other) const;
  std::vector<Vertex> members() const;

  std::span<const std::uint64_t> words() const { return words_; }
  std::size_t hash() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Finite simple graph, directed or undirected, immutable once built.
///
/// Vertices are dense indices 0..n-1. Landmark vertices produced by the
/// constructions are reachable through string labels rather than positions.
class Graph {
 public:
  Graph() = default;

  /// Validates and builds. Undirected edges are stored in both adjacency
  /// lists; neighbor lists keep insertion order.
  static Graph build(bool directed, std::size_t n, std::span<const Edge> edges, Labels labels = {});

  bool directed() const { return directed_; }
  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  /// Out-neighbors when directed.
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  bool has_edge(Vertex u, Vertex v) const;

  /// Each undirected edge once with u < v; directed edges as stored.
  std::vector<Edge> edges() const;

  const Labels& labels() const { return labels_; }
  std::optional<Vertex> find_label(const std::string& name) const;
  /// Throws InvalidInput if the label is absent.
  Vertex at(const std::string& name) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  bool directed_ = false;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<Vertex>> adjacency_;
  Labels labels_;
};

/// Incremental builder used by the generators. Duplicate edges are
/// rejected at build() time by Graph::build.
class GraphBuilder {
 public:
  explicit GraphBuilder(bool directed = false) : directed_(directed) {}

  Vertex add_vertex();
  Vertex add_vertex(const std::string& label);
  /// Appends `count` fresh vertices and returns the first index.
  Vertex add_vertices(std::size_t count);
  void add_edge(Vertex u, Vertex v) { edges_.emplace_back(u, v); }
  /// Adds a path u -> (length-1 fresh vertices) -> v of `length` edges and
  /// returns the interior vertices in order.
  std::vector<Vertex> add_path(Vertex u, Vertex v, std::size_t length);
  /// Hangs a fresh path of `length` edges off `anchor`; returns its vertices
  /// starting with the one adjacent to the anchor.
  std::vector<Vertex> add_tail(Vertex anchor, std::size_t length);
  /// Copies `g` into the builder, prefixing its labels; returns the offset.
  Vertex embed(const Graph& g, const std::string& label_prefix = {});
  void set_label(const std::string& name, Vertex v);

  std::size_t vertex_count() const { return n_; }
  bool directed() const { return directed_; }
  Graph build() const;

 private:
  bool directed_;
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  Labels labels_;
};

/// Shortest edge counts from `source`; kUnreachable where no path exists.
std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source);

/// BFS restricted to vertices outside `blocked` (source itself may be blocked).
std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source, const VertexSet& blocked);

/// Undirected graph with every vertex of `removed` deleted and the rest renumbered
/// in increasing order. Labels pointing at removed vertices are dropped.
Graph remove_vertices(const Graph& g, const VertexSet& removed);

/// Same vertices and edges with orientation forgotten.
Graph undirected_copy(const Graph& g);

}  // namespace tron
