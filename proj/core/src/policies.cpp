#include "tron/policies.hpp"

#include <algorithm>
#include <functional>
#include <memory>

namespace tron {

VisageRoles visage_roles(const Graph& g) {
  if (g.directed()) throw InvalidInput("visage policy: graph must be undirected");
  VisageRoles r;
  r.box = g.at("box");
  r.cross = g.at("cross");
  r.overhead = VertexSet(g.vertex_count());
  r.arena = VertexSet(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (r.bottleneck(v)) continue;
    if (g.has_edge(v, r.box) && g.has_edge(v, r.cross))
      r.overhead.insert(v);
    else
      r.arena.insert(v);
  }
  if (r.overhead.empty()) throw InvalidInput("visage policy: no overhead vertices");
  return r;
}

namespace {

constexpr std::uint64_t kLongestPathCap = 200'000;

VertexSet reach(const Graph& g, Vertex from, const VertexSet& used) {
  VertexSet seen(g.vertex_count());
  std::vector<Vertex> stack{from};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v))
      if (!used.contains(w) && !seen.contains(w)) {
        seen.insert(w);
        stack.push_back(w);
      }
  }
  return seen;
}

// Vertices on the longest path leaving `from` inside `allowed`; falls back to
// the reachable count when the search grows too large.
std::size_t longest_walk(const Graph& g, Vertex from, const VertexSet& allowed) {
  VertexSet on(g.vertex_count());
  std::uint64_t nodes = 0;
  std::size_t best = 0;
  const std::size_t bound = allowed.count();
  std::function<void(Vertex, std::size_t)> dfs = [&](Vertex v, std::size_t depth) {
    best = std::max(best, depth);
    if (best == bound || ++nodes > kLongestPathCap) return;
    for (Vertex w : g.neighbors(v))
      if (allowed.contains(w) && !on.contains(w)) {
        on.insert(w);
        dfs(w, depth + 1);
        on.erase(w);
      }
  };
  dfs(from, 0);
  return nodes > kLongestPathCap ? bound : best;
}

// Score of `me` standing on `mine` with the opponent on `theirs`, opponent to
// move next. Separated regions compare longest paths, otherwise Voronoi cells.
long long position_score(const Graph& g, const VertexSet& used, Vertex mine, std::optional<Vertex> theirs) {
  VertexSet b = reach(g, mine, used);
  if (!theirs) return static_cast<long long>(b.count());
  VertexSet a = reach(g, *theirs, used);
  if (!a.intersects(b))
    return static_cast<long long>(longest_walk(g, mine, b)) - static_cast<long long>(longest_walk(g, *theirs, a));
  auto dm = bfs_distances(g, mine, used);
  auto dt = bfs_distances(g, *theirs, used);
  long long score = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (used.contains(v)) continue;
    if (dm[v] == kUnreachable && dt[v] == kUnreachable) continue;
    if (dm[v] < dt[v])
      ++score;
    else
      --score;
  }
  return score;
}

}  // namespace

Move greedy_move(const Graph& g, const GameRules& rules, const GameState& s, Player me) {
  auto moves = legal_moves(g, rules, s);
  if (moves.size() == 1) return moves.front();
  std::optional<Vertex> theirs = s.position(opponent(me));
  Move best = moves.front();
  long long best_score = 0;
  bool first = true;
  for (Move m : moves) {
    if (m.is_pass()) continue;
    VertexSet used = s.used;
    used.insert(m.vertex());
    long long score = position_score(g, used, m.vertex(), theirs);
    if (first || score > best_score) {
      best = m;
      best_score = score;
      first = false;
    }
  }
  return best;
}

namespace {

// Overhead-induced subgame used while both players are still in the overhead.
struct OverheadGame {
  Graph graph;
  std::vector<Vertex> to_global;
  std::vector<std::optional<Vertex>> to_local;

  OverheadGame(const Graph& g, const VertexSet& overhead) : to_local(g.vertex_count()) {
    to_global = overhead.members();
    for (Vertex i = 0; i < to_global.size(); ++i) to_local[to_global[i]] = i;
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
      if (to_local[u] && to_local[v]) edges.emplace_back(*to_local[u], *to_local[v]);
    graph = Graph::build(false, to_global.size(), edges);
  }

  // Best overhead placement for Bob against Alice on `alice`.
  std::optional<Vertex> bob_placement(Vertex alice, const VertexSet& used) const {
    std::optional<Vertex> best;
    Ratio best_value;
    for (Vertex o = 0; o < graph.vertex_count(); ++o) {
      Vertex go = to_global[o];
      if (used.contains(go) || go == alice) continue;
      GameRules rules = GameRules::given_start(*to_local[alice], o, Objective::Ratio);
      Ratio value = solve(graph, rules).ratio();
      if (!best || value > best_value) {
        best = go;
        best_value = value;
      }
    }
    return best;
  }

  // Optimal move of `me` in the subgame restricted to the overhead.
  std::optional<Vertex> move(const GameState& s, Player me) const {
    GameState local;
    local.phase = Phase::Movement;
    local.alice_pos = to_local[*s.alice_pos];
    local.bob_pos = to_local[*s.bob_pos];
    local.used = VertexSet(graph.vertex_count());
    for (Vertex v = 0; v < graph.vertex_count(); ++v)
      if (s.used.contains(to_global[v])) local.used.insert(v);
    local.to_move = me;
    local.alice_count = s.alice_count;
    local.bob_count = s.bob_count;
    SolveResult r = solve_from(graph, GameRules::given_start(0, 1, Objective::Ratio), local);
    if (r.principal_variation.empty() || r.principal_variation.front().is_pass()) return std::nullopt;
    return to_global[r.principal_variation.front().vertex()];
  }
};

class Trapper {
 public:
  Trapper(const Graph& g, Player me) : roles_(visage_roles(g)), overhead_(g, roles_.overhead), me_(me) {}

  Move operator()(const Graph& g, const GameRules& rules, const GameState& s) const {
    if (s.to_move != me_) throw PolicyError("visage policy asked to move for the wrong player");
    auto moves = legal_moves(g, rules, s);
    auto legal = [&](Vertex v) { return std::find(moves.begin(), moves.end(), Move::to(v)) != moves.end(); };
    auto pick = [&](std::optional<Vertex> v) -> std::optional<Move> {
      if (v && legal(*v)) return Move::to(*v);
      return std::nullopt;
    };
    if (moves.size() == 1 && moves.front().is_pass()) return moves.front();

    if (s.phase == Phase::AlicePlacement) {
      if (auto m = pick(g.find_label("alice_start"))) return *m;
      return greedy_move(g, rules, s, me_);
    }
    if (s.phase == Phase::BobPlacement) {
      if (auto m = pick(placement(g, s))) return *m;
      return greedy_move(g, rules, s, me_);
    }
    if (s.phase == Phase::Movement) {
      if (auto m = pick(movement(g, s))) return *m;
    }
    return greedy_move(g, rules, s, me_);
  }

 private:
  bool in_overhead(Vertex v) const { return roles_.overhead.contains(v); }
  bool in_arena(Vertex v) const { return roles_.arena.contains(v); }

  std::optional<Vertex> placement(const Graph& g, const GameState& s) const {
    Vertex a = *s.alice_pos;
    if (in_arena(a)) {
      auto d = bfs_distances(g, a);
      // Distance to the bottleneck through the arena.
      return d[roles_.cross] < d[roles_.box] ? roles_.cross : roles_.box;
    }
    if (in_overhead(a)) return overhead_.bob_placement(a, s.used);
    return best_overhead_walk(g, s.used);
  }

  std::optional<Vertex> best_overhead_walk(const Graph& g, const VertexSet& used, std::optional<Vertex> from = {}) const {
    VertexSet allowed(g.vertex_count());
    for (Vertex v : roles_.overhead.members())
      if (!used.contains(v)) allowed.insert(v);
    std::optional<Vertex> best;
    std::size_t best_len = 0;
    for (Vertex v : allowed.members()) {
      if (from && !g.has_edge(*from, v)) continue;
      VertexSet rest = allowed;
      rest.erase(v);
      std::size_t len = longest_walk(g, v, rest);
      if (!best || len > best_len) {
        best = v;
        best_len = len;
      }
    }
    return best;
  }

  std::optional<Vertex> free_bottleneck(const VertexSet& used) const {
    if (!used.contains(roles_.box)) return roles_.box;
    if (!used.contains(roles_.cross)) return roles_.cross;
    return std::nullopt;
  }

  std::optional<Vertex> movement(const Graph& g, const GameState& s) const {
    Vertex mine = *s.position(me_);
    Vertex theirs = *s.position(opponent(me_));
    const VertexSet& used = s.used;
    bool box_used = used.contains(roles_.box);
    bool cross_used = used.contains(roles_.cross);

    if (in_overhead(mine)) {
      if (in_overhead(theirs)) {
        if (box_used != cross_used) return free_bottleneck(used);  // trap: she came back
        if (!box_used) {
          if (auto v = overhead_.move(s, me_)) return v;
          return free_bottleneck(used);
        }
        return std::nullopt;
      }
      if (roles_.bottleneck(theirs)) {
        if (auto v = best_overhead_walk(g, used, mine)) return v;
        return free_bottleneck(used);
      }
      return free_bottleneck(used);
    }
    if (roles_.bottleneck(mine)) {
      Vertex other = roles_.other(mine);
      if (in_arena(theirs) && !used.contains(other) && reach(g, theirs, used).contains(other)) {
        for (Vertex w : g.neighbors(mine))
          if (in_overhead(w) && !used.contains(w)) return w;
      }
      return arena_entry(g, s, mine, theirs);
    }
    return std::nullopt;
  }

  std::optional<Vertex> arena_entry(const Graph& g, const GameState& s, Vertex mine, Vertex theirs) const {
    std::optional<Vertex> best;
    long long best_score = 0;
    for (Vertex w : g.neighbors(mine)) {
      if (!in_arena(w) || s.used.contains(w)) continue;
      VertexSet used = s.used;
      used.insert(w);
      long long score = position_score(g, used, w, theirs);
      if (!best || score > best_score || (score == best_score && w < *best)) {
        best = w;
        best_score = score;
      }
    }
    return best;
  }

  VisageRoles roles_;
  OverheadGame overhead_;
  Player me_;
};

}  // namespace

ScriptedPolicy visage_bob_policy(const Graph& g) {
  auto t = std::make_shared<Trapper>(g, Player::Bob);
  return [t](const Graph& graph, const GameRules& rules, const GameState& s) { return (*t)(graph, rules, s); };
}

ScriptedPolicy planar_visage_alice_policy(const Graph& g) {
  g.at("alice_start");
  auto t = std::make_shared<Trapper>(g, Player::Alice);
  return [t](const Graph& graph, const GameRules& rules, const GameState& s) { return (*t)(graph, rules, s); };
}

}  // namespace tron
