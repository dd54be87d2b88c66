#include "tron/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "tron/analysis.hpp"

namespace tron {
namespace {

std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n) {
  // i < j, row-major upper triangle.
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::string rooted_code(const Graph& t, Vertex v, Vertex parent) {
  std::vector<std::string> kids;
  for (Vertex w : t.neighbors(v)) {
    if (w != parent) kids.push_back(rooted_code(t, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  return out + ")";
}

std::string tree_code(const Graph& t) {
  const auto n = t.vertex_count();
  if (n == 1) return "()";
  // Peel leaves to find the centre(s).
  std::vector<std::size_t> deg(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = t.neighbors(v).size();
    if (deg[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex v : layer) {
      for (Vertex w : t.neighbors(v)) {
        if (--deg[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::string best;
  for (Vertex c : layer) {
    auto code = rooted_code(t, c, c);
    if (best.empty() || code < best) best = code;
  }
  if (layer.size() == 2) {
    // Bicentral: root at the central edge.
    auto a = rooted_code(t, layer[0], layer[1]);
    auto b = rooted_code(t, layer[1], layer[0]);
    if (b < a) std::swap(a, b);
    best = "E" + a + b;
  }
  return best;
}

std::vector<int> refine_colours(const Graph& g) {
  const auto n = g.vertex_count();
  std::vector<int> colour(n, 0);
  for (Vertex v = 0; v < n; ++v) colour[v] = static_cast<int>(g.neighbors(v).size());
  for (std::size_t round = 0; round < n; ++round) {
    std::vector<std::pair<int, std::vector<int>>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].first = colour[v];
      for (Vertex w : g.neighbors(v)) sig[v].second.push_back(colour[w]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> next(n);
    for (Vertex v = 0; v < n; ++v) {
      next[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    }
    const bool stable = std::set<int>(next.begin(), next.end()).size() == std::set<int>(colour.begin(), colour.end()).size();
    colour = std::move(next);
    if (stable) break;
  }
  return colour;
}

Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if ((mask >> pair_index(i, j, n)) & 1U) edges.emplace_back(i, j);
    }
  }
  return Graph::build(false, n, edges);
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  const auto n = g.vertex_count();
  if (g.directed() || n > 11) throw InvalidInput("canonical_code supports undirected graphs on at most 11 vertices");
  const auto colour = refine_colours(g);
  // Vertices sorted by colour; permute only within colour classes.
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return colour[a] < colour[b]; });
  std::vector<std::pair<std::size_t, std::size_t>> classes;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && colour[order[j]] == colour[order[i]]) ++j;
    classes.emplace_back(i, j);
    std::sort(order.begin() + static_cast<long>(i), order.begin() + static_cast<long>(j));
    i = j;
  }
  std::uint64_t best = ~std::uint64_t{0};
  // Odometer over per-class permutations.
  for (;;) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (g.has_edge(order[i], order[j])) mask |= std::uint64_t{1} << pair_index(i, j, n);
      }
    }
    best = std::min(best, mask);
    std::size_t c = classes.size();
    bool advanced = false;
    while (c > 0) {
      --c;
      auto first = order.begin() + static_cast<long>(classes[c].first);
      auto last = order.begin() + static_cast<long>(classes[c].second);
      if (std::next_permutation(first, last)) {
        advanced = true;
        break;
      }
      // next_permutation wrapped this class back to sorted order; carry.
    }
    if (!advanced) break;
  }
  return best;
}

std::vector<Graph> all_trees(std::size_t n) {
  if (n == 0) throw InvalidInput("trees need at least one vertex");
  std::vector<Graph> level{Graph::build(false, 1, {})};
  for (std::size_t size = 2; size <= n; ++size) {
    std::map<std::string, Graph> next;
    for (const auto& t : level) {
      for (Vertex v = 0; v < t.vertex_count(); ++v) {
        auto edges = t.edges();
        edges.emplace_back(v, static_cast<Vertex>(t.vertex_count()));
        auto grown = Graph::build(false, size, edges);
        next.emplace(tree_code(grown), std::move(grown));
      }
    }
    level.clear();
    for (auto& [code, t] : next) level.push_back(std::move(t));
  }
  return level;
}

std::vector<Graph> all_graphs(std::size_t n, bool connected_only) {
  if (n > 9) throw InvalidInput("graph enumeration supports at most 9 vertices");
  std::vector<std::uint64_t> level{0};  // codes on `size` vertices
  std::size_t size = 1;
  if (n == 0) return {Graph::build(false, 0, {})};
  while (size < n) {
    std::set<std::uint64_t> next;
    for (auto code : level) {
      const Graph base = graph_from_mask(size, code);
      auto base_edges = base.edges();
      for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << size); ++nb) {
        auto edges = base_edges;
        for (Vertex v = 0; v < size; ++v) {
          if ((nb >> v) & 1U) edges.emplace_back(v, static_cast<Vertex>(size));
        }
        next.insert(canonical_code(Graph::build(false, size + 1, edges)));
      }
    }
    level.assign(next.begin(), next.end());
    ++size;
  }
  std::vector<Graph> out;
  for (auto code : level) {
    auto g = graph_from_mask(n, code);
    if (!connected_only || is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> all_directed_graphs(std::size_t n) {
  if (n > 4) throw InvalidInput("directed enumeration supports at most 4 vertices");
  std::vector<Edge> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v) arcs.emplace_back(u, v);
    }
  }
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << arcs.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      if ((mask >> i) & 1U) edges.push_back(arcs[i]);
    }
    out.push_back(Graph::build(true, n, edges));
  }
  return out;
}

}  // namespace tron
