#pragma once

#include <cstdint>
#include <vector>

#include "tron/graph.hpp"

namespace tron {

/// Non-isomorphic free trees on exactly n vertices (n >= 1).
std::vector<Graph> all_trees(std::size_t n);

/// Non-isomorphic undirected graphs on exactly n vertices (n <= 9).
std::vector<Graph> all_graphs(std::size_t n, bool connected_only);

/// Every labelled directed simple graph on exactly n vertices (n <= 4).
std::vector<Graph> all_directed_graphs(std::size_t n);

/// Isomorphism-invariant code of an undirected graph on at most 11 vertices:
/// the lexicographically smallest upper-triangle adjacency mask over
/// orderings compatible with colour refinement.
std::uint64_t canonical_code(const Graph& g);

}  // namespace tron
