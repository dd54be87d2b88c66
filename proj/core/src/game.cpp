#include "tron/game.hpp"

#include <algorithm>
#include <numeric>

namespace tron {

std::string to_string(Player p) { return p == Player::Alice ? "Alice" : "Bob"; }

std::string to_string(Phase p) {
  switch (p) {
    case Phase::AlicePlacement: return "AlicePlacement";
    case Phase::AliceHandicap: return "AliceHandicap";
    case Phase::BobPlacement: return "BobPlacement";
    case Phase::Movement: return "Movement";
  }
  return "?";
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::AliceWins: return "AliceWins";
    case Classification::Tie: return "Tie";
    case Classification::BobWins: return "BobWins";
  }
  return "?";
}

std::string to_string(Objective o) { return o == Objective::Ratio ? "ratio" : "classification"; }

std::string to_string(const Move& m) { return m.is_pass() ? "pass" : std::to_string(m.vertex()); }

std::string Ratio::str() const {
  const auto g = std::gcd(num, den);
  if (g == 0) return "0/0";
  return std::to_string(num / g) + "/" + std::to_string(den / g);
}

void validate_rules(const Graph& g, const GameRules& rules) {
  const auto n = g.vertex_count();
  if (rules.given) {
    const auto [a, b] = *rules.given;
    if (a >= n || b >= n) throw InvalidInput("given start vertex out of range");
    if (a == b) throw InvalidInput("given start vertices must differ (both are " + std::to_string(a) + ")");
    if (rules.alice_handicap > 0) throw InvalidInput("a handicap cannot be combined with given starts");
  } else if (n < 2) {
    throw InvalidInput("free placement needs at least two vertices");
  }
  if (rules.bob_whitelist) {
    if (rules.bob_whitelist->universe() != n) throw InvalidInput("whitelist universe does not match the graph");
    if (rules.bob_whitelist->empty()) throw InvalidInput("Bob's start whitelist is empty");
  }
}

GameState initial_state(const Graph& g, const GameRules& rules) {
  validate_rules(g, rules);
  GameState s;
  s.used = VertexSet(g.vertex_count());
  if (rules.given) {
    s.phase = Phase::Movement;
    s.alice_pos = rules.given->alice;
    s.bob_pos = rules.given->bob;
    s.used.insert(rules.given->alice);
    s.used.insert(rules.given->bob);
    s.alice_count = 1;
    s.bob_count = 1;
  }
  return s;
}

namespace {

void step_moves(const Graph& g, const GameState& s, std::optional<Vertex> pos, std::vector<Move>& out) {
  if (!pos) return;
  std::vector<Vertex> free;
  for (Vertex w : g.neighbors(*pos)) {
    if (!s.used.contains(w)) free.push_back(w);
  }
  std::sort(free.begin(), free.end());
  for (Vertex w : free) out.push_back(Move::to(w));
}

}  // namespace

std::vector<Move> legal_moves(const Graph& g, const GameRules& rules, const GameState& s) {
  std::vector<Move> out;
  if (s.terminal()) return out;
  const auto n = static_cast<Vertex>(g.vertex_count());
  switch (s.phase) {
    case Phase::AlicePlacement:
      for (Vertex v = 0; v < n; ++v) out.push_back(Move::to(v));
      break;
    case Phase::BobPlacement:
      for (Vertex v = 0; v < n; ++v) {
        if (s.used.contains(v)) continue;
        if (rules.bob_whitelist && !rules.bob_whitelist->contains(v)) continue;
        out.push_back(Move::to(v));
      }
      break;
    case Phase::AliceHandicap:
      step_moves(g, s, s.alice_pos, out);
      break;
    case Phase::Movement:
      step_moves(g, s, s.position(s.to_move), out);
      break;
  }
  if (out.empty()) out.push_back(Move::pass());
  return out;
}

GameState apply_move(const Graph& g, const GameRules& rules, const GameState& s, Move move) {
  const auto legal = legal_moves(g, rules, s);
  if (std::find(legal.begin(), legal.end(), move) == legal.end()) {
    throw InvalidInput("illegal move " + to_string(move) + " for " + to_string(s.to_move) + " in phase " +
                       to_string(s.phase));
  }
  GameState next = s;
  auto occupy = [&](Player p, Vertex v) {
    next.used.insert(v);
    if (p == Player::Alice) {
      next.alice_pos = v;
      ++next.alice_count;
    } else {
      next.bob_pos = v;
      ++next.bob_count;
    }
  };

  switch (s.phase) {
    case Phase::AlicePlacement:
      occupy(Player::Alice, move.vertex());
      next.handicap_left = rules.alice_handicap;
      next.phase = rules.alice_handicap > 0 ? Phase::AliceHandicap : Phase::BobPlacement;
      next.to_move = rules.alice_handicap > 0 ? Player::Alice : Player::Bob;
      break;
    case Phase::AliceHandicap:
      if (!move.is_pass()) occupy(Player::Alice, move.vertex());
      if (--next.handicap_left == 0) {
        next.phase = Phase::BobPlacement;
        next.to_move = Player::Bob;
      }
      break;
    case Phase::BobPlacement:
      if (move.is_pass()) {
        next.consecutive_passes = 1;
      } else {
        occupy(Player::Bob, move.vertex());
      }
      next.phase = Phase::Movement;
      next.to_move = Player::Alice;
      break;
    case Phase::Movement:
      if (move.is_pass()) {
        ++next.consecutive_passes;
      } else {
        occupy(s.to_move, move.vertex());
        next.consecutive_passes = 0;
      }
      next.to_move = opponent(s.to_move);
      break;
  }
  return next;
}

GameState replay(const Graph& g, const GameRules& rules, const std::vector<Move>& moves) {
  GameState s = initial_state(g, rules);
  for (const auto& m : moves) s = apply_move(g, rules, s, m);
  return s;
}

}  // namespace tron
