#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tron/graph.hpp"

namespace tron {

/// Two disjoint paths with m vertices each. Labels: p1_start, p1_end,
/// p2_start, p2_end.
Graph two_paths(std::size_t m);

/// Adds one vertex labelled "super" adjacent to `attach` (default: every
/// vertex of g).
Graph add_super_vertex(const Graph& g, const std::optional<VertexSet>& attach = std::nullopt);

enum class VisageVariant { Ordinary, PlanarBob, PlanarAlice, KConnected };
std::string to_string(VisageVariant v);

struct VisageParams {
  VisageVariant variant = VisageVariant::Ordinary;
  /// l for the ordinary visage, path length for planar ones, k for the
  /// k-connected one.
  std::size_t scale = 0;
  std::size_t spacing = 4;
  std::size_t k = 1;
  std::size_t height = 0;  ///< double-tree height (k-connected only)
  std::vector<Vertex> overhead;
  std::vector<Vertex> box;
  std::vector<Vertex> cross;
  /// Arena vertices in cycle/path order (necklace vertices for k-connected).
  std::vector<Vertex> arena;
  std::vector<Vertex> box_attachments;
  std::vector<Vertex> cross_attachments;
};

struct Visage {
  Graph graph;
  VisageParams params;
};

/// Cycle of 4l vertices, two bottleneck vertices ("box", "cross") adjacent
/// to every overhead vertex; c_{8i} joins box and c_{8i+4} joins cross.
/// Requires l even and l >= 2.
Visage visage(std::size_t l, const Graph& overhead);

/// Long path instead of the cycle; attachments at every `spacing`-th path
/// vertex alternate box/cross starting with box. The Alice variant keeps the
/// overhead's "alice_start" label (vertex 0 of the overhead if absent) as
/// "alice_start".
Visage planar_visage(VisageVariant variant, std::size_t path_len, std::size_t spacing, const Graph& overhead);

struct DoubleTreeParams {
  std::size_t d = 2;
  std::size_t h = 1;
  std::size_t leaf_parents = 1;  ///< l = d^(h-1)
  Vertex upper_root = 0;
  Vertex lower_root = 0;
  /// Leaves left to right: index (j-1)*d + (i-1) holds u_i^j (resp. v_i^j).
  std::vector<Vertex> upper_leaves;
  std::vector<Vertex> lower_leaves;
  /// children[v] for every tree vertex, left to right.
  std::vector<std::vector<Vertex>> children;

  Vertex u(std::size_t i, std::size_t j) const { return upper_leaves.at((j - 1) * d + (i - 1)); }
  Vertex v(std::size_t i, std::size_t j) const { return lower_leaves.at((j - 1) * d + (i - 1)); }
};

struct DoubleTree {
  Graph graph;
  DoubleTreeParams params;
};

/// Two balanced d-ary trees of height h whose leaf layers are joined by the
/// leaf paths E1 and the cross edges
///   (u_n^j, v_m^j) for n <= m,
///   (u_n^{j+1}, v_m^j) for m <= n, j < l,
///   (u_n^1, v_m^l) for m <= n.
DoubleTree double_tree(std::size_t d, std::size_t h);

/// Hamilton path from the upper root to the lower root.
std::vector<Vertex> double_tree_hamilton(std::size_t d, std::size_t h);
std::vector<Vertex> double_tree_hamilton(const DoubleTree& t);

/// Greedy left-to-right choice of m leaves with pairwise BFS distance at
/// least min_dist; nullopt when the greedy pass cannot find m.
std::optional<std::vector<Vertex>> select_afar_leaves(const Graph& g, const std::vector<Vertex>& leaves, std::size_t m,
                                                     std::size_t min_dist);

/// Smallest height at which a degree-k double-tree yields k leaves with
/// pairwise distance >= 2k, searching up to `max_height`.
std::optional<std::size_t> minimal_afar_height(std::size_t k, std::size_t max_height = 8);

inline constexpr std::size_t kNecklaceTrees = 4;

/// k overhead paths, k box and k cross bottleneck vertices, and a necklace of
/// four degree-k double-trees chained root to root. Throws InvalidInput when
/// h is too small to provide k afar leaves.
Visage k_connected_visage(std::size_t k, std::size_t h, std::size_t overhead_path_len);

}  // namespace tron
