#include "tron/solver.hpp"

#include <algorithm>
#include <array>
#include <unordered_map>

namespace tron {
namespace {

constexpr Vertex kNone = ~Vertex{0};
constexpr Vertex kPassCode = ~Vertex{0};
constexpr Vertex kSeparated = ~Vertex{0} - 1;

template <std::size_t W>
struct Bits {
  std::array<std::uint64_t, W> w{};

  bool test(Vertex v) const { return ((w[v >> 6] >> (v & 63)) & 1U) != 0; }
  void set(Vertex v) { w[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(Vertex v) { w[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool operator==(const Bits&) const = default;
};

template <std::size_t W>
struct Key {
  Bits<W> used;
  std::uint64_t meta = 0;
  std::uint64_t meta2 = 0;
  bool operator==(const Key&) const = default;
};

template <std::size_t W>
struct KeyHash {
  std::size_t operator()(const Key<W>& k) const {
    std::uint64_t h = k.meta * 0x9e3779b97f4a7c15ULL ^ (k.meta2 + 0x632be59bd9b4e019ULL);
    for (auto x : k.used.w) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

struct Entry {
  std::uint32_t alpha;
  std::uint32_t beta;
  Vertex best;
};

template <std::size_t W>
struct Node {
  Bits<W> used;
  Vertex apos = kNone;
  Vertex bpos = kNone;
  Phase phase = Phase::AlicePlacement;
  Player to_move = Player::Alice;
  std::uint8_t passes = 0;
  std::uint32_t alpha = 0;
  std::uint32_t beta = 0;
  std::uint32_t handicap_left = 0;
};

template <std::size_t W>
struct Undo {
  Vertex apos, bpos;
  Phase phase;
  Player to_move;
  std::uint8_t passes;
  std::uint32_t alpha, beta, handicap_left;
  Vertex occupied;
};

template <std::size_t W>
class Search {
 public:
  Search(const Graph& g, const GameRules& rules, const SolveOptions& options, const ScriptedPolicy* policy,
         Player scripted)
      : g_(g), rules_(rules), options_(options), policy_(policy), scripted_(scripted) {
    const auto n = g.vertex_count();
    adj_.resize(n);
    for (Vertex v = 0; v < n; ++v) {
      auto nb = g.neighbors(v);
      adj_[v].assign(nb.begin(), nb.end());
      std::sort(adj_[v].begin(), adj_[v].end());
    }
    if (rules.bob_whitelist) {
      for (Vertex v : rules.bob_whitelist->members()) whitelist_.set(v);
    } else {
      for (Vertex v = 0; v < n; ++v) whitelist_.set(v);
    }
    scratch_.reserve(n);
    // Game depth never exceeds 2n + 3 plies plus handicap passes; buffers are sized once so
    // references into them stay valid across recursion.
    move_buffers_.resize(2 * n + 8 + rules.alice_handicap);
    pv_.resize(2 * n + 10 + rules.alice_handicap);
  }

  SolveResult run(const GameState& start) {
    load(start);
    SolveResult result;
    const Outcome value = search(1);
    result.outcome = value;
    result.nodes_expanded = nodes_;
    result.max_stack_depth = max_depth_;
    result.budget_exhausted = exhausted_;
    if (options_.memoize) {
      load(start);
      result.principal_variation = chain_pv();
    } else if (!pv_.empty()) {
      for (Vertex code : pv_[1]) result.principal_variation.push_back(code == kPassCode ? Move::pass() : Move::to(code));
    }
    return result;
  }

 private:
  void load(const GameState& s) {
    node_ = Node<W>{};
    for (Vertex v : s.used.members()) node_.used.set(v);
    node_.apos = s.alice_pos.value_or(kNone);
    node_.bpos = s.bob_pos.value_or(kNone);
    node_.phase = s.phase;
    node_.to_move = s.to_move;
    node_.passes = s.consecutive_passes;
    node_.alpha = static_cast<std::uint32_t>(s.alice_count);
    node_.beta = static_cast<std::uint32_t>(s.bob_count);
    node_.handicap_left = static_cast<std::uint32_t>(s.handicap_left);
  }

  GameState game_state() const {
    GameState s;
    s.used = VertexSet(g_.vertex_count());
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      if (node_.used.test(v)) s.used.insert(v);
    }
    if (node_.apos != kNone) s.alice_pos = node_.apos;
    if (node_.bpos != kNone) s.bob_pos = node_.bpos;
    s.phase = node_.phase;
    s.to_move = node_.to_move;
    s.consecutive_passes = node_.passes;
    s.alice_count = node_.alpha;
    s.bob_count = node_.beta;
    s.handicap_left = node_.handicap_left;
    return s;
  }

  Key<W> key() const {
    Key<W> k;
    k.used = node_.used;
    k.meta = (std::uint64_t{node_.apos == kNone ? 0U : node_.apos + 1} << 32) |
             (std::uint64_t{node_.bpos == kNone ? 0U : node_.bpos + 1} << 8) |
             (std::uint64_t{static_cast<std::uint8_t>(node_.phase)} << 4) |
             (std::uint64_t{static_cast<std::uint8_t>(node_.to_move)} << 2) | node_.passes;
    k.meta2 = (std::uint64_t{node_.alpha} << 32) | node_.handicap_left;
    return k;
  }

  Outcome current() const { return {node_.alpha, node_.beta}; }

  void generate(std::vector<Vertex>& out) const {
    out.clear();
    const auto n = static_cast<Vertex>(g_.vertex_count());
    auto steps = [&](Vertex pos) {
      if (pos == kNone) return;
      for (Vertex w : adj_[pos]) {
        if (!node_.used.test(w)) out.push_back(w);
      }
    };
    switch (node_.phase) {
      case Phase::AlicePlacement:
        for (Vertex v = 0; v < n; ++v) out.push_back(v);
        break;
      case Phase::BobPlacement:
        for (Vertex v = 0; v < n; ++v) {
          if (!node_.used.test(v) && whitelist_.test(v)) out.push_back(v);
        }
        break;
      case Phase::AliceHandicap:
        steps(node_.apos);
        break;
      case Phase::Movement:
        steps(node_.to_move == Player::Alice ? node_.apos : node_.bpos);
        break;
    }
    if (out.empty()) out.push_back(kPassCode);
  }

  void occupy(Player p, Vertex v) {
    node_.used.set(v);
    if (p == Player::Alice) {
      node_.apos = v;
      ++node_.alpha;
    } else {
      node_.bpos = v;
      ++node_.beta;
    }
  }

  Undo<W> apply(Vertex code) {
    Undo<W> u{node_.apos, node_.bpos, node_.phase, node_.to_move, node_.passes,
              node_.alpha, node_.beta, node_.handicap_left, kNone};
    const bool pass = code == kPassCode;
    if (!pass) u.occupied = code;
    switch (node_.phase) {
      case Phase::AlicePlacement:
        occupy(Player::Alice, code);
        node_.handicap_left = static_cast<std::uint32_t>(rules_.alice_handicap);
        node_.phase = node_.handicap_left > 0 ? Phase::AliceHandicap : Phase::BobPlacement;
        node_.to_move = node_.handicap_left > 0 ? Player::Alice : Player::Bob;
        break;
      case Phase::AliceHandicap:
        if (!pass) occupy(Player::Alice, code);
        if (--node_.handicap_left == 0) {
          node_.phase = Phase::BobPlacement;
          node_.to_move = Player::Bob;
        }
        break;
      case Phase::BobPlacement:
        if (pass) {
          node_.passes = 1;
        } else {
          occupy(Player::Bob, code);
        }
        node_.phase = Phase::Movement;
        node_.to_move = Player::Alice;
        break;
      case Phase::Movement:
        if (pass) {
          ++node_.passes;
        } else {
          occupy(node_.to_move, code);
          node_.passes = 0;
        }
        node_.to_move = opponent(node_.to_move);
        break;
    }
    return u;
  }

  void undo(const Undo<W>& u) {
    if (u.occupied != kNone) node_.used.reset(u.occupied);
    node_.apos = u.apos;
    node_.bpos = u.bpos;
    node_.phase = u.phase;
    node_.to_move = u.to_move;
    node_.passes = u.passes;
    node_.alpha = u.alpha;
    node_.beta = u.beta;
    node_.handicap_left = u.handicap_left;
  }

  // Marks into `seen` every unused vertex reachable from `from` (excluded).
  std::size_t flood(Vertex from, const Bits<W>& blocked, Bits<W>& seen) {
    std::size_t count = 0;
    scratch_.clear();
    scratch_.push_back(from);
    while (!scratch_.empty()) {
      const Vertex u = scratch_.back();
      scratch_.pop_back();
      for (Vertex w : adj_[u]) {
        if (blocked.test(w) || seen.test(w)) continue;
        seen.set(w);
        ++count;
        scratch_.push_back(w);
      }
    }
    return count;
  }

  bool reach_touches(Vertex from, const Bits<W>& target) {
    Bits<W> seen{};
    scratch_.clear();
    scratch_.push_back(from);
    while (!scratch_.empty()) {
      const Vertex u = scratch_.back();
      scratch_.pop_back();
      for (Vertex w : adj_[u]) {
        if (node_.used.test(w) || seen.test(w)) continue;
        if (target.test(w)) return true;
        seen.set(w);
        scratch_.push_back(w);
      }
    }
    return false;
  }

  // Longest simple path from `from` through vertices outside `blocked`.
  void longest_dfs(Vertex from, Bits<W>& blocked, std::vector<Vertex>& path, std::vector<Vertex>& best,
                   std::size_t depth, std::size_t region) {
    max_depth_ = std::max(max_depth_, depth);
    if (path.size() > best.size()) best = path;
    if (best.size() == region) return;
    Bits<W> seen{};
    if (path.size() + flood(from, blocked, seen) <= best.size()) return;
    for (Vertex w : adj_[from]) {
      if (blocked.test(w)) continue;
      blocked.set(w);
      path.push_back(w);
      longest_dfs(w, blocked, path, best, depth + 1, region);
      path.pop_back();
      blocked.reset(w);
      if (best.size() == region) return;
    }
  }

  std::vector<Vertex> longest_from(Vertex from, std::size_t depth) {
    std::vector<Vertex> best;
    if (from == kNone) return best;
    Bits<W> blocked = node_.used;
    Bits<W> seen{};
    const std::size_t region = flood(from, blocked, seen);
    if (region == 0) return best;
    std::vector<Vertex> path;
    longest_dfs(from, blocked, path, best, depth, region);
    return best;
  }

  std::size_t longest_length(Vertex from, std::size_t depth) {
    if (from == kNone) return 0;
    if (!options_.memoize) return longest_from(from, depth).size();
    Key<W> k;
    k.used = node_.used;
    k.meta = from;
    if (auto it = lp_cache_.find(k); it != lp_cache_.end()) return it->second;
    const auto len = longest_from(from, depth).size();
    if (lp_cache_.size() < options_.memo_limit) lp_cache_.emplace(k, static_cast<std::uint32_t>(len));
    return len;
  }

  // When the players can no longer interact the rest of the game is two
  // independent longest-path problems.
  std::optional<Outcome> separated_value(std::size_t depth) {
    Bits<W> reach_a{};
    if (node_.apos != kNone) flood(node_.apos, node_.used, reach_a);
    if (node_.bpos != kNone && reach_touches(node_.bpos, reach_a)) return std::nullopt;
    const bool a_stuck = reach_a == Bits<W>{};
    if (policy_ != nullptr) {
      // Only the free side may be replaced by its longest path.
      const bool scripted_stuck =
          scripted_ == Player::Alice ? a_stuck : (node_.bpos == kNone || !has_free_neighbor(node_.bpos));
      if (!scripted_stuck) return std::nullopt;
    }
    Outcome o = current();
    o.alpha += longest_length(node_.apos, depth);
    o.beta += longest_length(node_.bpos, depth);
    return o;
  }

  bool has_free_neighbor(Vertex v) const {
    return std::any_of(adj_[v].begin(), adj_[v].end(), [&](Vertex w) { return !node_.used.test(w); });
  }

  std::vector<Vertex> interleave_separated(std::size_t depth) {
    auto path_a = longest_from(node_.apos, depth);
    auto path_b = longest_from(node_.bpos, depth);
    std::vector<Vertex> moves;
    std::size_t ia = 0;
    std::size_t ib = 0;
    Player mover = node_.to_move;
    int passes = node_.passes;
    while (passes < 2) {
      auto& path = mover == Player::Alice ? path_a : path_b;
      auto& idx = mover == Player::Alice ? ia : ib;
      if (idx < path.size()) {
        moves.push_back(path[idx++]);
        passes = 0;
      } else {
        moves.push_back(kPassCode);
        ++passes;
      }
      mover = opponent(mover);
    }
    return moves;
  }

  bool better(Player mover, const Outcome& a, const Outcome& b) const {
    if (rules_.objective == Objective::Ratio) {
      return mover == Player::Alice ? a.ratio() < b.ratio() : a.ratio() > b.ratio();
    }
    const auto ca = static_cast<int>(a.classification());
    const auto cb = static_cast<int>(b.classification());
    return mover == Player::Alice ? ca < cb : ca > cb;
  }

  bool ideal(Player mover, const Outcome& a) const {
    if (rules_.objective != Objective::Classification) return false;
    return a.classification() == (mover == Player::Alice ? Classification::AliceWins : Classification::BobWins);
  }

  std::vector<Vertex>& pv_at(std::size_t depth) { return pv_.at(depth); }
  std::vector<Vertex>& moves_at(std::size_t depth) { return move_buffers_.at(depth); }

  Outcome search(std::size_t depth) {
    max_depth_ = std::max(max_depth_, depth);
    ++nodes_;
    if (options_.node_budget && nodes_ > *options_.node_budget) exhausted_ = true;
    const bool linear = !options_.memoize;
    if (linear) pv_at(depth).clear();
    if (exhausted_ || node_.passes >= 2) return current();

    Key<W> k;
    if (!linear) {
      k = key();
      if (auto it = memo_.find(k); it != memo_.end()) return {it->second.alpha, it->second.beta};
    }

    if (node_.phase == Phase::Movement) {
      if (auto sep = separated_value(depth)) {
        if (linear) {
          pv_at(depth) = interleave_separated(depth);
        } else {
          store(k, *sep, kSeparated);
        }
        return *sep;
      }
    }

    auto& moves = moves_at(depth);
    generate(moves);
    const Player mover = node_.to_move;
    Outcome best{};
    Vertex best_move = kNone;

    if (policy_ != nullptr && mover == scripted_) {
      const Move m = (*policy_)(g_, rules_, game_state());
      const Vertex code = m.is_pass() ? kPassCode : m.vertex();
      if (std::find(moves.begin(), moves.end(), code) == moves.end()) {
        throw PolicyError("scripted policy for " + to_string(scripted_) + " proposed illegal move " + to_string(m) +
                          " at ply depth " + std::to_string(depth) + " (alpha=" + std::to_string(node_.alpha) +
                          ", beta=" + std::to_string(node_.beta) + ")");
      }
      const auto u = apply(code);
      best = search(depth + 1);
      undo(u);
      best_move = code;
      if (linear) adopt_pv(depth, code);
    } else {
      for (Vertex code : moves) {
        const auto u = apply(code);
        const Outcome v = search(depth + 1);
        undo(u);
        if (best_move == kNone || better(mover, v, best)) {
          best = v;
          best_move = code;
          if (linear) adopt_pv(depth, code);
          if (ideal(mover, best)) break;
        }
        if (exhausted_) break;
      }
    }
    if (!linear) store(k, best, best_move);
    return best;
  }

  void adopt_pv(std::size_t depth, Vertex code) {
    auto& child = pv_at(depth + 1);
    auto& mine = pv_at(depth);
    mine.clear();
    mine.push_back(code);
    mine.insert(mine.end(), child.begin(), child.end());
  }

  void store(const Key<W>& k, const Outcome& v, Vertex best) {
    if (exhausted_ || memo_.size() >= options_.memo_limit) return;
    memo_.emplace(k, Entry{static_cast<std::uint32_t>(v.alpha), static_cast<std::uint32_t>(v.beta), best});
  }

  std::vector<Move> chain_pv() {
    std::vector<Move> pv;
    while (node_.passes < 2) {
      auto it = memo_.find(key());
      if (it == memo_.end()) break;
      const Vertex best = it->second.best;
      if (best == kSeparated) {
        for (Vertex code : interleave_separated(0)) pv.push_back(code == kPassCode ? Move::pass() : Move::to(code));
        break;
      }
      pv.push_back(best == kPassCode ? Move::pass() : Move::to(best));
      apply(best);
    }
    return pv;
  }

  const Graph& g_;
  const GameRules& rules_;
  SolveOptions options_;
  const ScriptedPolicy* policy_;
  Player scripted_;
  std::vector<std::vector<Vertex>> adj_;
  Bits<W> whitelist_{};
  Node<W> node_;
  std::vector<Vertex> scratch_;
  std::vector<std::vector<Vertex>> move_buffers_;
  std::vector<std::vector<Vertex>> pv_;
  std::unordered_map<Key<W>, Entry, KeyHash<W>> memo_;
  std::unordered_map<Key<W>, std::uint32_t, KeyHash<W>> lp_cache_;
  std::uint64_t nodes_ = 0;
  std::size_t max_depth_ = 0;
  bool exhausted_ = false;
};

SolveResult dispatch(const Graph& g, const GameRules& rules, const GameState& start, const SolveOptions& options,
                     const ScriptedPolicy* policy, Player scripted) {
  validate_rules(g, rules);
  const auto n = g.vertex_count();
  if (n <= 64) return Search<1>(g, rules, options, policy, scripted).run(start);
  if (n <= 128) return Search<2>(g, rules, options, policy, scripted).run(start);
  if (n <= 256) return Search<4>(g, rules, options, policy, scripted).run(start);
  if (n <= kMaxSolverVertices) return Search<8>(g, rules, options, policy, scripted).run(start);
  throw InvalidInput("graph has " + std::to_string(n) + " vertices; the exact solver accepts at most " +
                     std::to_string(kMaxSolverVertices));
}

}  // namespace

SolveResult solve(const Graph& g, const GameRules& rules, const SolveOptions& options) {
  return dispatch(g, rules, initial_state(g, rules), options, nullptr, Player::Alice);
}

SolveResult solve_from(const Graph& g, const GameRules& rules, const GameState& start, const SolveOptions& options) {
  return dispatch(g, rules, start, options, nullptr, Player::Alice);
}

SolveResult solve_vs_policy(const Graph& g, const GameRules& rules, const ScriptedPolicy& policy, Player scripted_side,
                            const SolveOptions& options) {
  return dispatch(g, rules, initial_state(g, rules), options, &policy, scripted_side);
}

SolveResult solve_vs_policy_from(const Graph& g, const GameRules& rules, const GameState& start,
                                 const ScriptedPolicy& policy, Player scripted_side, const SolveOptions& options) {
  return dispatch(g, rules, start, options, &policy, scripted_side);
}

std::map<Vertex, SolveResult> optimal_start_report(const Graph& g, const GameRules& rules,
                                                   const SolveOptions& options) {
  if (rules.given) throw InvalidInput("start report requires free placement");
  const GameState root = initial_state(g, rules);
  std::map<Vertex, SolveResult> report;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    report.emplace(v, solve_from(g, rules, apply_move(g, rules, root, Move::to(v)), options));
  }
  return report;
}

}  // namespace tron
