#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "tron/game.hpp"

using namespace tron;

TEST(Ratio, ReducedStringAndOrdering) {
  EXPECT_EQ((Ratio{6, 4}).str(), "3/2");
  EXPECT_TRUE((Ratio{3, 2}) == (Ratio{6, 4}));
  EXPECT_TRUE((Ratio{1, 2}) < (Ratio{2, 3}));
  EXPECT_EQ((Outcome{2, 1}).classification(), Classification::AliceWins);
  EXPECT_EQ((Outcome{2, 2}).classification(), Classification::Tie);
  EXPECT_EQ((Outcome{1, 3}).classification(), Classification::BobWins);
}

TEST(Game, FreePlacementSequence) {
  Graph g = fixtures::path(3);
  GameRules rules = GameRules::free_start();
  GameState s = initial_state(g, rules);
  EXPECT_EQ(s.phase, Phase::AlicePlacement);
  EXPECT_EQ(legal_moves(g, rules, s).size(), 3u);
  s = apply_move(g, rules, s, Move::to(1));
  EXPECT_EQ(s.phase, Phase::BobPlacement);
  auto bob = legal_moves(g, rules, s);
  EXPECT_EQ(bob, (std::vector<Move>{Move::to(0), Move::to(2)}));
  s = apply_move(g, rules, s, Move::to(0));
  EXPECT_EQ(s.phase, Phase::Movement);
  EXPECT_EQ(s.to_move, Player::Alice);
  EXPECT_EQ(legal_moves(g, rules, s), (std::vector<Move>{Move::to(2)}));
}

TEST(Game, StuckPlayerPassesAndTwoPassesEnd) {
  Graph g = fixtures::path(3);
  GameRules rules = GameRules::free_start();
  GameState s = replay(g, rules, {Move::to(1), Move::to(0), Move::to(2)});
  EXPECT_EQ(legal_moves(g, rules, s), (std::vector<Move>{Move::pass()}));
  s = apply_move(g, rules, s, Move::pass());
  EXPECT_FALSE(s.terminal());
  s = apply_move(g, rules, s, Move::pass());
  EXPECT_TRUE(s.terminal());
  EXPECT_EQ(s.outcome(), (Outcome{2, 1}));
  EXPECT_TRUE(legal_moves(g, rules, s).empty());
}

TEST(Game, PassResetsWhenOpponentMoves) {
  Graph g = fixtures::path(4);
  GameRules rules = GameRules::given_start(0, 1);
  GameState s = initial_state(g, rules);
  s = apply_move(g, rules, s, Move::pass());
  s = apply_move(g, rules, s, Move::to(2));
  EXPECT_EQ(s.consecutive_passes, 0);
  s = apply_move(g, rules, s, Move::pass());
  s = apply_move(g, rules, s, Move::to(3));
  s = apply_move(g, rules, s, Move::pass());
  s = apply_move(g, rules, s, Move::pass());
  EXPECT_TRUE(s.terminal());
  EXPECT_EQ(s.outcome(), (Outcome{1, 3}));
}

TEST(Game, HandicapMovesComeBeforeBobPlaces) {
  Graph g = fixtures::path(5);
  GameRules rules = GameRules::free_start();
  rules.alice_handicap = 2;
  GameState s = replay(g, rules, {Move::to(0), Move::to(1)});
  EXPECT_EQ(s.phase, Phase::AliceHandicap);
  s = apply_move(g, rules, s, Move::to(2));
  EXPECT_EQ(s.phase, Phase::BobPlacement);
  EXPECT_EQ(s.alice_count, 3u);
  EXPECT_EQ(legal_moves(g, rules, s), (std::vector<Move>{Move::to(3), Move::to(4)}));
}

TEST(Game, WhitelistRestrictsBob) {
  Graph g = fixtures::complete(4);
  GameRules rules = GameRules::free_start();
  VertexSet w(4);
  w.insert(3);
  rules.bob_whitelist = w;
  GameState s = replay(g, rules, {Move::to(0)});
  EXPECT_EQ(legal_moves(g, rules, s), (std::vector<Move>{Move::to(3)}));
}

TEST(Game, DirectedMovesFollowArcs) {
  GraphBuilder b(true);
  b.add_vertices(3);
  b.add_edge(0, 1);
  b.add_edge(2, 0);
  Graph g = b.build();
  GameRules rules = GameRules::given_start(0, 1);
  GameState s = initial_state(g, rules);
  EXPECT_EQ(legal_moves(g, rules, s), (std::vector<Move>{Move::pass()}));
}

TEST(Game, InvalidRulesAndMovesThrow) {
  Graph g = fixtures::path(3);
  EXPECT_THROW(initial_state(g, GameRules::given_start(1, 1)), InvalidInput);
  EXPECT_THROW(initial_state(g, GameRules::given_start(0, 9)), InvalidInput);
  GameRules both = GameRules::given_start(0, 2);
  both.alice_handicap = 1;
  EXPECT_THROW(initial_state(g, both), InvalidInput);
  EXPECT_THROW(initial_state(fixtures::path(1), GameRules::free_start()), InvalidInput);
  GameRules rules = GameRules::given_start(0, 2);
  EXPECT_THROW(apply_move(g, rules, initial_state(g, rules), Move::to(2)), InvalidInput);
}
