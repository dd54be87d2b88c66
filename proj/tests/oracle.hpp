#pragma once

// Independent reference implementations for tests. Nothing here calls the
// engine, solver or analysis code; graphs are read only through edges().

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "tron/graph.hpp"

namespace oracle {

struct Value {
  std::size_t alpha = 0;
  std::size_t beta = 0;
};

// beta/alpha as a comparable fraction.
inline int compare_ratio(const Value& a, const Value& b) {
  const auto l = a.beta * b.alpha;
  const auto r = b.beta * a.alpha;
  return l < r ? -1 : (l > r ? 1 : 0);
}

inline int verdict(const Value& v) { return v.beta > v.alpha ? 1 : (v.alpha > v.beta ? -1 : 0); }

struct Adjacency {
  std::size_t n = 0;
  std::vector<std::vector<tron::Vertex>> out;

  explicit Adjacency(const tron::Graph& g) : n(g.vertex_count()), out(g.vertex_count()) {
    for (const auto& [u, v] : g.edges()) {
      out[u].push_back(v);
      if (!g.directed()) out[v].push_back(u);
    }
  }
};

struct Rules {
  std::optional<std::pair<tron::Vertex, tron::Vertex>> given;
  std::optional<std::set<tron::Vertex>> whitelist;
  std::size_t handicap = 0;
  bool classification = false;  // false: ratio objective
};

// Plain minimax over every line of play, no memoization. Alice places, makes
// `handicap` moves, Bob places, then they alternate starting with Alice; a
// stuck player passes and two consecutive passes end the game.
class Minimax {
 public:
  Minimax(const tron::Graph& g, Rules rules) : adj_(g), rules_(std::move(rules)) {}

  Value solve() {
    used_.assign(adj_.n, 0);
    if (rules_.given) {
      const auto [a, b] = *rules_.given;
      used_[a] = used_[b] = 1;
      return play(a, b, 1, 1, true, 0);
    }
    std::optional<Value> best;
    for (tron::Vertex a = 0; a < adj_.n; ++a) {
      used_[a] = 1;
      Value v = handicap(a, rules_.handicap, 1);
      used_[a] = 0;
      if (!best || prefer(true, v, *best)) best = v;
    }
    return *best;
  }

 private:
  bool prefer(bool alice, const Value& a, const Value& b) const {
    if (rules_.classification) {
      return alice ? verdict(a) < verdict(b) : verdict(a) > verdict(b);
    }
    const int c = compare_ratio(a, b);
    return alice ? c < 0 : c > 0;
  }

  Value handicap(tron::Vertex a, std::size_t left, std::size_t alpha) {
    if (left == 0) return place_bob(a, alpha);
    std::optional<Value> best;
    for (tron::Vertex w : adj_.out[a]) {
      if (used_[w]) continue;
      used_[w] = 1;
      Value v = handicap(w, left - 1, alpha + 1);
      used_[w] = 0;
      if (!best || prefer(true, v, *best)) best = v;
    }
    if (!best) return handicap(a, left - 1, alpha);
    return *best;
  }

  Value place_bob(tron::Vertex a, std::size_t alpha) {
    std::optional<Value> best;
    for (tron::Vertex b = 0; b < adj_.n; ++b) {
      if (used_[b]) continue;
      if (rules_.whitelist && !rules_.whitelist->count(b)) continue;
      used_[b] = 1;
      Value v = play(a, b, alpha, 1, true, 0);
      used_[b] = 0;
      if (!best || prefer(false, v, *best)) best = v;
    }
    if (!best) return play(a, std::nullopt, alpha, 0, true, 1);
    return *best;
  }

  Value play(std::optional<tron::Vertex> a, std::optional<tron::Vertex> b, std::size_t alpha, std::size_t beta,
             bool alice_to_move, int passes) {
    if (passes >= 2) return {alpha, beta};
    const auto pos = alice_to_move ? a : b;
    std::optional<Value> best;
    if (pos) {
      for (tron::Vertex w : adj_.out[*pos]) {
        if (used_[w]) continue;
        used_[w] = 1;
        Value v = alice_to_move ? play(w, b, alpha + 1, beta, false, 0) : play(a, w, alpha, beta + 1, true, 0);
        used_[w] = 0;
        if (!best || prefer(alice_to_move, v, *best)) best = v;
      }
    }
    if (!best) return play(a, b, alpha, beta, !alice_to_move, passes + 1);
    return *best;
  }

  Adjacency adj_;
  Rules rules_;
  std::vector<char> used_;
};

inline Value minimax(const tron::Graph& g, const Rules& rules = {}) { return Minimax(g, rules).solve(); }

// Connectivity by plain search: components of g minus `removed`.
inline bool connected_without(const tron::Graph& g, const std::vector<char>& removed) {
  Adjacency adj(g);
  std::size_t start = adj.n;
  std::size_t alive = 0;
  for (std::size_t v = 0; v < adj.n; ++v)
    if (!removed[v]) {
      ++alive;
      if (start == adj.n) start = v;
    }
  if (alive <= 1) return true;
  std::vector<char> seen(adj.n, 0);
  std::vector<std::size_t> stack{start};
  seen[start] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    auto u = stack.back();
    stack.pop_back();
    for (auto w : adj.out[u])
      if (!removed[w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == alive;
}

// Smallest vertex set whose removal disconnects g; n-1 for complete graphs.
inline std::size_t kappa(const tron::Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<char> none(n, 0);
  if (!connected_without(g, none)) return 0;
  std::size_t best = n - 1;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size >= best || size + 2 > n) continue;
    std::vector<char> removed(n, 0);
    for (std::size_t v = 0; v < n; ++v) removed[v] = (mask >> v) & 1u;
    if (!connected_without(g, removed)) best = size;
  }
  return best;
}

// Edge count of the longest simple path from `source` by exhaustive DFS.
inline std::size_t longest_path(const tron::Graph& g, tron::Vertex source) {
  Adjacency adj(g);
  std::vector<char> used(adj.n, 0);
  std::function<std::size_t(tron::Vertex)> go = [&](tron::Vertex u) {
    std::size_t best = 0;
    for (auto w : adj.out[u])
      if (!used[w]) {
        used[w] = 1;
        best = std::max(best, 1 + go(w));
        used[w] = 0;
      }
    return best;
  };
  used[source] = 1;
  return go(source);
}

// Canonical form by trying every vertex permutation (n <= 7).
inline std::vector<char> canonical(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<char> best;
  do {
    std::vector<char> m(n * n, 0);
    for (auto [u, v] : edges) {
      m[perm[u] * n + perm[v]] = 1;
      m[perm[v] * n + perm[u]] = 1;
    }
    if (best.empty() || m < best) best = m;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

struct GraphCounts {
  std::size_t all = 0;
  std::size_t connected = 0;
  std::size_t trees = 0;
};

// Isomorphism classes on exactly n unlabelled vertices by brute force.
inline GraphCounts count_graphs(std::size_t n) {
  std::vector<std::pair<int, int>> slots;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) slots.emplace_back(static_cast<int>(u), static_cast<int>(v));
  std::set<std::vector<char>> all;
  std::set<std::vector<char>> conn;
  std::set<std::vector<char>> trees;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((mask >> i) & 1u) edges.push_back(slots[i]);
    auto code = canonical(n, edges);
    if (!all.insert(code).second) continue;
    tron::GraphBuilder b;
    b.add_vertices(n);
    for (auto [u, v] : edges) b.add_edge(static_cast<tron::Vertex>(u), static_cast<tron::Vertex>(v));
    if (connected_without(b.build(), std::vector<char>(n, 0))) {
      conn.insert(code);
      if (edges.size() + 1 == n) trees.insert(code);
    }
  }
  return {all.size(), conn.size(), trees.size()};
}

}  // namespace oracle
