#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tron/graph.hpp"

namespace tron {

enum class Player : std::uint8_t { Alice, Bob };
enum class Phase : std::uint8_t { AlicePlacement, AliceHandicap, BobPlacement, Movement };
enum class Objective : std::uint8_t { Ratio, Classification };
enum class Classification : std::int8_t { AliceWins = -1, Tie = 0, BobWins = 1 };

inline Player opponent(Player p) { return p == Player::Alice ? Player::Bob : Player::Alice; }
std::string to_string(Player p);
std::string to_string(Phase p);
std::string to_string(Classification c);
std::string to_string(Objective o);

struct GivenStarts {
  Vertex alice;
  Vertex bob;
};

struct GameRules {
  /// Empty means free placement.
  std::optional<GivenStarts> given;
  /// Admissible start vertices for Bob in free placement.
  std::optional<VertexSet> bob_whitelist;
  /// Movement moves Alice makes after placing and before Bob places.
  std::size_t alice_handicap = 0;
  Objective objective = Objective::Ratio;

  static GameRules free_start(Objective objective = Objective::Ratio) { return {std::nullopt, std::nullopt, 0, objective}; }
  static GameRules given_start(Vertex alice, Vertex bob, Objective objective = Objective::Ratio) {
    return {GivenStarts{alice, bob}, std::nullopt, 0, objective};
  }
};

/// A placement or step onto `vertex`, or a pass. Passes order after every vertex.
class Move {
 public:
  static Move to(Vertex v) { return Move(v); }
  static Move pass() { return Move(kPassCode); }

  bool is_pass() const { return code_ == kPassCode; }
  Vertex vertex() const { return code_; }

  friend auto operator<=>(const Move&, const Move&) = default;

 private:
  static constexpr Vertex kPassCode = ~Vertex{0};
  explicit Move(Vertex code) : code_(code) {}
  Vertex code_;
};

std::string to_string(const Move& m);

/// Exact rational b/a with a > 0 (or the degenerate 0/0 for an empty game).
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  double value() const { return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den); }
  /// Reduced representation, e.g. "3/2".
  std::string str() const;

  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    return a.num * b.den <=> b.num * a.den;
  }
  friend bool operator==(const Ratio& a, const Ratio& b) { return a.num * b.den == b.num * a.den; }
};

struct Outcome {
  std::size_t alpha = 0;
  std::size_t beta = 0;

  Ratio ratio() const { return Ratio{beta, alpha}; }
  Classification classification() const {
    if (beta > alpha) return Classification::BobWins;
    if (alpha > beta) return Classification::AliceWins;
    return Classification::Tie;
  }
  friend bool operator==(const Outcome&, const Outcome&) = default;
};

struct GameState {
  Phase phase = Phase::AlicePlacement;
  std::optional<Vertex> alice_pos;
  std::optional<Vertex> bob_pos;
  VertexSet used;
  Player to_move = Player::Alice;
  std::size_t alice_count = 0;
  std::size_t bob_count = 0;
  std::uint8_t consecutive_passes = 0;
  std::size_t handicap_left = 0;

  bool terminal() const { return consecutive_passes >= 2; }
  Outcome outcome() const { return {alice_count, bob_count}; }
  std::optional<Vertex> position(Player p) const { return p == Player::Alice ? alice_pos : bob_pos; }

  friend bool operator==(const GameState&, const GameState&) = default;
};

/// Throws InvalidInput for inconsistent rules (identical given starts,
/// handicap with given starts, fewer than two vertices).
void validate_rules(const Graph& g, const GameRules& rules);

GameState initial_state(const Graph& g, const GameRules& rules);

/// Legal moves in increasing vertex order; a stuck mover gets exactly {pass}.
std::vector<Move> legal_moves(const Graph& g, const GameRules& rules, const GameState& s);

/// Throws InvalidInput when the move is not legal in `s`.
GameState apply_move(const Graph& g, const GameRules& rules, const GameState& s, Move move);

/// Plays `moves` from the initial state and returns the final state.
GameState replay(const Graph& g, const GameRules& rules, const std::vector<Move>& moves);

}  // namespace tron
