#include "tron/analysis.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <set>

namespace tron {

bool is_connected(const Graph& g) {
  const auto n = g.vertex_count();
  if (n == 0) return true;
  const auto d = bfs_distances(undirected_copy(g), 0);
  return std::none_of(d.begin(), d.end(), [](std::size_t x) { return x == kUnreachable; });
}

bool is_tree(const Graph& g) {
  return !g.directed() && g.vertex_count() >= 1 && g.edge_count() + 1 == g.vertex_count() && is_connected(g);
}

// ---------------------------------------------------------------------------
// Unit-capacity flow on the split graph: in(v) = 2v, out(v) = 2v + 1.

namespace {

class SplitFlow {
 public:
  SplitFlow(const Graph& g, Vertex s, Vertex t) : n_(g.vertex_count()), s_(s), t_(t), adj_(2 * n_) {
    const int big = static_cast<int>(n_) + 1;
    for (Vertex v = 0; v < n_; ++v) add(in(v), out(v), (v == s || v == t) ? big : 1);
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v : g.neighbors(u)) add(out(u), in(v), big);
    }
  }

  std::size_t run(std::size_t limit) {
    std::size_t flow = 0;
    while (flow < limit && augment()) ++flow;
    return flow;
  }

  std::vector<std::vector<Vertex>> paths() {
    std::vector<std::vector<Vertex>> out_paths;
    // Forward arcs with original capacity 1 now saturated carry flow.
    for (;;) {
      std::vector<Vertex> path{s_};
      std::size_t node = out(s_);
      bool found = false;
      while (true) {
        bool moved = false;
        for (std::size_t i = 0; i < adj_[node].size(); ++i) {
          auto& e = adj_[node][i];
          if (!e.forward || e.flow <= 0) continue;
          --e.flow;
          const std::size_t next = e.to;
          const auto v = static_cast<Vertex>(next / 2);
          if (next == in(t_)) {
            path.push_back(t_);
            found = true;
          } else {
            path.push_back(v);
            // Step through the in->out arc of v.
            for (auto& inner : adj_[next]) {
              if (inner.forward && inner.to == out(v) && inner.flow > 0) {
                --inner.flow;
                break;
              }
            }
            node = out(v);
          }
          moved = true;
          break;
        }
        if (!moved || found) break;
      }
      if (!found) break;
      out_paths.push_back(std::move(path));
    }
    return out_paths;
  }

  /// Vertices whose in-node is reachable in the residual graph but whose
  /// out-node is not. Valid after a full (unlimited) run.
  VertexSet min_cut() const {
    std::vector<char> seen(adj_.size(), 0);
    std::deque<std::size_t> q{out(s_)};
    seen[out(s_)] = 1;
    while (!q.empty()) {
      const auto u = q.front();
      q.pop_front();
      for (const auto& e : adj_[u]) {
        if (e.cap - e.flow > 0 && !seen[e.to]) {
          seen[e.to] = 1;
          q.push_back(e.to);
        }
      }
    }
    VertexSet cut(n_);
    for (Vertex v = 0; v < n_; ++v) {
      if (v != s_ && v != t_ && seen[in(v)] && !seen[out(v)]) cut.insert(v);
    }
    return cut;
  }

 private:
  struct Arc {
    std::size_t to;
    int cap;
    int flow;
    std::size_t rev;
    bool forward;
  };

  static std::size_t in(Vertex v) { return 2 * static_cast<std::size_t>(v); }
  static std::size_t out(Vertex v) { return 2 * static_cast<std::size_t>(v) + 1; }

  void add(std::size_t u, std::size_t v, int cap) {
    adj_[u].push_back({v, cap, 0, adj_[v].size(), true});
    adj_[v].push_back({u, 0, 0, adj_[u].size() - 1, false});
  }

  bool augment() {
    const std::size_t src = out(s_);
    const std::size_t dst = in(t_);
    std::vector<std::pair<std::size_t, std::size_t>> parent(adj_.size(), {SIZE_MAX, 0});
    std::deque<std::size_t> q{src};
    parent[src] = {src, 0};
    while (!q.empty() && parent[dst].first == SIZE_MAX) {
      const auto u = q.front();
      q.pop_front();
      for (std::size_t i = 0; i < adj_[u].size(); ++i) {
        const auto& e = adj_[u][i];
        if (e.cap - e.flow > 0 && parent[e.to].first == SIZE_MAX) {
          parent[e.to] = {u, i};
          q.push_back(e.to);
        }
      }
    }
    if (parent[dst].first == SIZE_MAX) return false;
    for (std::size_t v = dst; v != src;) {
      const auto [u, i] = parent[v];
      auto& e = adj_[u][i];
      e.flow += 1;
      adj_[e.to][e.rev].flow -= 1;
      v = u;
    }
    return true;
  }

  std::size_t n_;
  Vertex s_;
  Vertex t_;
  std::vector<std::vector<Arc>> adj_;
};

void require_undirected(const Graph& g, const char* what) {
  if (g.directed()) throw InvalidInput(std::string(what) + " expects an undirected graph");
}

}  // namespace

MengerWitness disjoint_paths(const Graph& g, Vertex s, Vertex t, std::size_t limit) {
  if (s >= g.vertex_count() || t >= g.vertex_count() || s == t) throw InvalidInput("disjoint_paths needs two distinct vertices");
  SplitFlow flow(g, s, t);
  flow.run(limit);
  return {s, t, flow.paths()};
}

ConnectivityReport vertex_connectivity(const Graph& g) {
  require_undirected(g, "vertex_connectivity");
  const auto n = g.vertex_count();
  if (n < 2) throw InvalidInput("vertex_connectivity needs at least two vertices");
  ConnectivityReport report;
  if (!is_connected(g)) {
    report.kappa = 0;
    report.witness_cut = VertexSet(n);
    return report;
  }
  if (g.edge_count() == n * (n - 1) / 2) {
    report.kappa = n - 1;
    return report;
  }

  // Upper bound and witness from the minimum-degree vertex.
  Vertex vmin = 0;
  for (Vertex v = 1; v < n; ++v) {
    if (g.neighbors(v).size() < g.neighbors(vmin).size()) vmin = v;
  }
  std::size_t best = g.neighbors(vmin).size();
  VertexSet cut(n);
  for (Vertex w : g.neighbors(vmin)) cut.insert(w);
  // Some vertex among any best+1 is outside every minimum cut and has a
  // non-adjacent partner on the far side.
  for (Vertex i = 0; i < n && i <= best; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (g.has_edge(i, j)) continue;
      SplitFlow flow(g, i, j);
      const auto f = flow.run(best);
      if (f < best) {
        SplitFlow full(g, i, j);
        full.run(n);
        best = f;
        cut = full.min_cut();
      }
    }
  }
  report.kappa = best;
  report.witness_cut = cut;

  // A few deterministic sample pairs for Menger witnesses.
  std::size_t sampled = 0;
  for (Vertex i = 0; i < n && sampled < 4; i += std::max<Vertex>(1, static_cast<Vertex>(n / 4))) {
    for (Vertex j = static_cast<Vertex>(n - 1); j > i; --j) {
      if (g.has_edge(i, j)) continue;
      report.menger_paths.push_back(disjoint_paths(g, i, j, best));
      ++sampled;
      break;
    }
  }
  return report;
}

bool disconnects(const Graph& g, const VertexSet& cut) {
  const auto n = g.vertex_count();
  Vertex start = 0;
  while (start < n && cut.contains(start)) ++start;
  if (start == n) return false;
  const auto d = bfs_distances(g, start, cut);
  for (Vertex v = 0; v < n; ++v) {
    if (!cut.contains(v) && d[v] == kUnreachable) return true;
  }
  return false;
}

std::size_t vertex_connectivity_by_enumeration(const Graph& g) {
  require_undirected(g, "vertex_connectivity_by_enumeration");
  const auto n = g.vertex_count();
  if (!is_connected(g)) return 0;
  // Subsets of size s in lexicographic order.
  for (std::size_t size = 1; size + 2 <= n; ++size) {
    std::vector<Vertex> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = static_cast<Vertex>(i);
    while (true) {
      if (disconnects(g, VertexSet::from(n, pick))) return size;
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t k = i; k < size; ++k) pick[k] = pick[k - 1] + 1;
    }
  }
  return n - 1;
}

bool valid_menger_witness(const Graph& g, const MengerWitness& w) {
  VertexSet interior(g.vertex_count());
  for (const auto& p : w.paths) {
    if (p.size() < 2 || p.front() != w.source || p.back() != w.target) return false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (!g.has_edge(p[i], p[i + 1])) return false;
    }
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      if (interior.contains(p[i]) || p[i] == w.source || p[i] == w.target) return false;
      interior.insert(p[i]);
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

class LongestPathSearch {
 public:
  LongestPathSearch(const Graph& g, const VertexSet& forbidden, std::optional<std::uint64_t> budget)
      : g_(g), forbidden_(forbidden), budget_(budget), blocked_(g.vertex_count()) {}

  void from(Vertex start, LongestPath& best) {
    blocked_ = forbidden_;
    blocked_.insert(start);
    path_.assign(1, start);
    dfs(start, best);
  }

 private:
  std::size_t reachable(Vertex from) const {
    std::vector<Vertex> stack{from};
    VertexSet seen(g_.vertex_count());
    std::size_t count = 0;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g_.neighbors(u)) {
        if (blocked_.contains(w) || seen.contains(w)) continue;
        seen.insert(w);
        ++count;
        stack.push_back(w);
      }
    }
    return count;
  }

  void dfs(Vertex u, LongestPath& best) {
    ++best.nodes;
    if (budget_ && best.nodes > *budget_) {
      best.budget_exhausted = true;
      return;
    }
    if (path_.size() - 1 > best.length || best.path.empty()) {
      best.length = path_.size() - 1;
      best.path = path_;
    }
    if (path_.size() - 1 + reachable(u) <= best.length) return;
    for (Vertex w : g_.neighbors(u)) {
      if (blocked_.contains(w)) continue;
      blocked_.insert(w);
      path_.push_back(w);
      dfs(w, best);
      path_.pop_back();
      blocked_.erase(w);
      if (best.budget_exhausted) return;
    }
  }

  const Graph& g_;
  const VertexSet& forbidden_;
  std::optional<std::uint64_t> budget_;
  VertexSet blocked_;
  std::vector<Vertex> path_;
};

}  // namespace

LongestPath longest_path_length(const Graph& g, std::optional<Vertex> source, const VertexSet& forbidden_transit,
                                std::optional<std::uint64_t> node_budget) {
  const auto n = g.vertex_count();
  if (source && *source >= n) throw InvalidInput("longest path source out of range");
  VertexSet forbidden = forbidden_transit.universe() == n ? forbidden_transit : VertexSet(n);
  LongestPath best;
  LongestPathSearch search(g, forbidden, node_budget);
  if (source) {
    search.from(*source, best);
  } else {
    for (Vertex v = 0; v < n && !best.budget_exhausted; ++v) search.from(v, best);
  }
  return best;
}

HamiltonCheck check_hamilton_path(const Graph& g, const std::vector<Vertex>& seq) {
  const auto n = g.vertex_count();
  VertexSet seen(n);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] >= n) return {false, i, "vertex " + std::to_string(seq[i]) + " out of range"};
    if (seen.contains(seq[i])) return {false, i, "vertex " + std::to_string(seq[i]) + " repeated"};
    seen.insert(seq[i]);
    if (i > 0 && !g.has_edge(seq[i - 1], seq[i])) {
      return {false, i, "no edge " + std::to_string(seq[i - 1]) + "-" + std::to_string(seq[i])};
    }
  }
  if (seq.size() != n) return {false, seq.size(), "covers " + std::to_string(seq.size()) + " of " + std::to_string(n) + " vertices"};
  return {true, std::nullopt, {}};
}

// ---------------------------------------------------------------------------

std::string to_string(LemmaStatus s) {
  switch (s) {
    case LemmaStatus::Holds: return "holds";
    case LemmaStatus::Violated: return "violated";
    case LemmaStatus::Skipped: return "skipped";
    case LemmaStatus::BudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

TreeLemmaReport verify_tree_lemma(const Graph& t, const SolveOptions& options) {
  if (!is_tree(t)) throw InvalidInput("verify_tree_lemma expects a tree");
  TreeLemmaReport report;
  if (t.vertex_count() < 2) return report;
  const auto r = solve(t, GameRules::free_start(Objective::Ratio), options);
  report.outcome = r.outcome;
  if (r.budget_exhausted) {
    report.status = LemmaStatus::BudgetExhausted;
    return report;
  }
  report.alice_bound = r.outcome.alpha <= r.outcome.beta + 1;
  report.bob_bound = r.outcome.beta <= 2 * r.outcome.alpha;
  report.status = report.alice_bound && report.bob_bound ? LemmaStatus::Holds : LemmaStatus::Violated;
  return report;
}

RatioLemmaReport verify_supervertex_lemma(const Graph& g, const SolveOptions& options) {
  require_undirected(g, "verify_supervertex_lemma");
  RatioLemmaReport report;
  const auto base = solve(g, GameRules::free_start(Objective::Ratio), options);
  report.base = base.outcome;
  if (base.budget_exhausted) {
    report.status = LemmaStatus::BudgetExhausted;
    return report;
  }
  if (!(base.outcome.beta > base.outcome.alpha)) return report;

  GraphBuilder b(false);
  b.embed(g);
  const Vertex super = b.add_vertex();
  for (Vertex v = 0; v < g.vertex_count(); ++v) b.add_edge(super, v);
  const auto derived = solve(b.build(), GameRules::free_start(Objective::Ratio), options);
  report.derived = derived.outcome;
  if (derived.budget_exhausted) {
    report.status = LemmaStatus::BudgetExhausted;
    return report;
  }
  report.lhs = Ratio{derived.outcome.alpha, derived.outcome.beta};
  report.rhs = Ratio{base.outcome.beta, base.outcome.alpha};
  // lhs may have a zero denominator (Bob shut out) which is +infinity.
  const bool holds = report.lhs.den == 0 || report.lhs.num * report.rhs.den >= report.rhs.num * report.lhs.den;
  report.status = holds ? LemmaStatus::Holds : LemmaStatus::Violated;
  return report;
}

RatioLemmaReport verify_deletion_lemma(const Graph& g, const SolveOptions& options) {
  require_undirected(g, "verify_deletion_lemma");
  RatioLemmaReport report;
  const auto base = solve(g, GameRules::free_start(Objective::Ratio), options);
  report.base = base.outcome;
  if (base.budget_exhausted) {
    report.status = LemmaStatus::BudgetExhausted;
    return report;
  }
  if (!(base.outcome.beta < base.outcome.alpha) || base.principal_variation.empty()) return report;

  VertexSet removed(g.vertex_count());
  removed.insert(base.principal_variation.front().vertex());
  const Graph h = remove_vertices(g, removed);
  if (h.vertex_count() < 2) return report;
  const auto derived = solve(h, GameRules::free_start(Objective::Ratio), options);
  report.derived = derived.outcome;
  if (derived.budget_exhausted) {
    report.status = LemmaStatus::BudgetExhausted;
    return report;
  }
  report.lhs = Ratio{derived.outcome.beta + 1, derived.outcome.alpha};
  report.rhs = Ratio{base.outcome.alpha, base.outcome.beta};
  auto meets = [&](const Ratio& lhs) { return report.rhs.den != 0 && lhs.num * report.rhs.den >= report.rhs.num * lhs.den; };
  if (meets(report.lhs)) {
    report.status = LemmaStatus::Holds;
    return report;
  }
  const auto rules = GameRules::free_start(Objective::Ratio);
  const auto all = optimal_outcomes(h, rules, options);
  if (all.empty()) {
    report.status = LemmaStatus::BudgetExhausted;
    return report;
  }
  for (const Outcome& o : all) {
    const Ratio lhs{o.beta + 1, o.alpha};
    if (meets(lhs)) {
      report.derived = o;
      report.lhs = lhs;
      report.tie_resolved = true;
      report.status = LemmaStatus::Holds;
      return report;
    }
  }
  report.status = LemmaStatus::Violated;
  return report;
}

namespace {

bool collect_optimal(const Graph& g, const GameRules& rules, const GameState& s, const SolveOptions& options,
                     std::set<std::pair<std::size_t, std::size_t>>& out) {
  if (s.terminal()) {
    out.insert({s.alice_count, s.bob_count});
    return true;
  }
  const auto here = solve_from(g, rules, s, options);
  if (here.budget_exhausted) return false;
  for (const Move m : legal_moves(g, rules, s)) {
    const GameState next = apply_move(g, rules, s, m);
    Outcome value;
    if (next.terminal()) {
      value = next.outcome();
    } else {
      const auto r = solve_from(g, rules, next, options);
      if (r.budget_exhausted) return false;
      value = r.outcome;
    }
    const bool same = rules.objective == Objective::Ratio ? value.ratio() == here.ratio()
                                                          : value.classification() == here.classification();
    if (same && !collect_optimal(g, rules, next, options, out)) return false;
  }
  return true;
}

}  // namespace

std::vector<Outcome> optimal_outcomes(const Graph& g, const GameRules& rules, const SolveOptions& options) {
  std::set<std::pair<std::size_t, std::size_t>> found;
  if (!collect_optimal(g, rules, initial_state(g, rules), options, found)) return {};
  std::vector<Outcome> result;
  for (const auto& [a, b] : found) result.push_back({a, b});
  return result;
}

}  // namespace tron
