#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "tron/constructions.hpp"
#include "tron/enumerate.hpp"
#include "tron/solver.hpp"

using namespace tron;

namespace {

oracle::Value as_value(const Outcome& o) { return {o.alpha, o.beta}; }

void expect_same_ratio(const Graph& g, const GameRules& rules, const oracle::Rules& orules) {
  const auto got = solve(g, rules);
  const auto want = oracle::minimax(g, orules);
  EXPECT_EQ(oracle::compare_ratio(as_value(got.outcome), want), 0)
      << "solver " << got.outcome.alpha << ":" << got.outcome.beta << " oracle " << want.alpha << ":" << want.beta;
}

void expect_same_class(const Graph& g, GameRules rules, oracle::Rules orules) {
  rules.objective = Objective::Classification;
  orules.classification = true;
  const auto got = solve(g, rules);
  const auto want = oracle::minimax(g, orules);
  EXPECT_EQ(static_cast<int>(got.classification()), oracle::verdict(want));
}

}  // namespace

TEST(SolverOracle, FreeStartAllGraphsUpToSix) {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const auto& g : all_graphs(n, false)) {
      expect_same_ratio(g, GameRules::free_start(), {});
      expect_same_class(g, GameRules::free_start(), {});
    }
  }
}

TEST(SolverOracle, GivenStartsAllPairsUpToFive) {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const auto& g : all_graphs(n, true)) {
      for (Vertex a = 0; a < n; ++a)
        for (Vertex b = 0; b < n; ++b) {
          if (a == b) continue;
          oracle::Rules o;
          o.given = {a, b};
          expect_same_ratio(g, GameRules::given_start(a, b), o);
          expect_same_class(g, GameRules::given_start(a, b), o);
        }
    }
  }
}

TEST(SolverOracle, DirectedGivenStartsOnThreeVertices) {
  for (const auto& g : all_directed_graphs(3)) {
    for (Vertex a = 0; a < 3; ++a)
      for (Vertex b = 0; b < 3; ++b) {
        if (a == b) continue;
        oracle::Rules o;
        o.given = {a, b};
        expect_same_class(g, GameRules::given_start(a, b), o);
      }
  }
}

TEST(SolverOracle, HandicapOnCyclesPathsAndTrees) {
  std::vector<Graph> graphs;
  for (std::size_t n = 4; n <= 9; ++n) {
    graphs.push_back(fixtures::cycle(n));
    graphs.push_back(fixtures::path(n));
  }
  for (const auto& t : all_trees(7)) graphs.push_back(t);
  for (const auto& g : graphs) {
    for (std::size_t t = 1; t <= 2; ++t) {
      GameRules rules = GameRules::free_start();
      rules.alice_handicap = t;
      oracle::Rules o;
      o.handicap = t;
      expect_same_ratio(g, rules, o);
    }
  }
}

TEST(SolverOracle, WhitelistedBobStarts) {
  for (const auto& g : all_graphs(5, true)) {
    GameRules rules = GameRules::free_start();
    VertexSet w(5);
    w.insert(0);
    w.insert(3);
    rules.bob_whitelist = w;
    oracle::Rules o;
    o.whitelist = std::set<Vertex>{0, 3};
    expect_same_ratio(g, rules, o);
  }
}

TEST(SolverOracle, TwoPathsMatchesBruteForce) {
  for (std::size_t m : {4u, 5u, 6u, 10u}) {
    Graph g = two_paths(m);
    const auto got = solve(g, GameRules::free_start());
    const auto want = oracle::minimax(g);
    EXPECT_EQ(oracle::compare_ratio(as_value(got.outcome), want), 0) << "m=" << m;
    EXPECT_GT(got.ratio().value(), 1.0) << "m=" << m;
  }
  const auto ten = solve(two_paths(10), GameRules::free_start());
  EXPECT_GT(ten.ratio().value(), 1.0);
  EXPECT_LT(ten.ratio().value(), 1.7);
}

TEST(Solver, SmallSanityValuesFromOracle) {
  for (const auto& g : {fixtures::path(2), fixtures::complete(3), fixtures::complete(5), fixtures::cycle(4)}) {
    const auto got = solve(g, GameRules::free_start());
    const auto want = oracle::minimax(g);
    EXPECT_EQ(oracle::compare_ratio(as_value(got.outcome), want), 0);
    EXPECT_EQ(static_cast<int>(got.classification()), oracle::verdict(want));
  }
}

TEST(Solver, PrincipalVariationReplaysToOutcome) {
  for (const auto& g : all_graphs(6, true)) {
    const auto r = solve(g, GameRules::free_start());
    const GameState end = replay(g, GameRules::free_start(), r.principal_variation);
    EXPECT_TRUE(end.terminal());
    EXPECT_EQ(end.outcome(), r.outcome);
  }
}

TEST(Solver, LinearModeMatchesMemoAndStaysShallow) {
  for (std::size_t n = 2; n <= 7; ++n) {
    for (const auto& g : all_graphs(n, false)) {
      SolveOptions linear;
      linear.memoize = false;
      const auto a = solve(g, GameRules::free_start());
      const auto b = solve(g, GameRules::free_start(), linear);
      EXPECT_EQ(a.outcome, b.outcome);
      EXPECT_LE(b.max_stack_depth, 2 * n + 3);
    }
  }
}

TEST(Solver, BudgetExhaustionIsFlagged) {
  SolveOptions tiny;
  tiny.node_budget = 5;
  const auto r = solve(fixtures::cycle(8), GameRules::free_start(), tiny);
  EXPECT_TRUE(r.budget_exhausted);
  const auto full = solve(fixtures::cycle(8), GameRules::free_start());
  EXPECT_FALSE(full.budget_exhausted);
}

TEST(Solver, OptimalStartReportCoversEveryVertex) {
  Graph g = fixtures::star(3);
  const auto report = optimal_start_report(g, GameRules::free_start());
  EXPECT_EQ(report.size(), 4u);
  const auto best = solve(g, GameRules::free_start());
  Ratio lowest = report.begin()->second.ratio();
  for (const auto& [v, r] : report)
    if (r.ratio() < lowest) lowest = r.ratio();
  EXPECT_TRUE(lowest == best.ratio());
}

TEST(SolverPolicy, ScriptedBobNeverBeatsOptimalBob) {
  // Bob takes the lowest legal move; his restricted value cannot exceed the
  // unrestricted optimum.
  ScriptedPolicy lowest = [](const Graph& g, const GameRules& rules, const GameState& s) {
    return legal_moves(g, rules, s).front();
  };
  for (const auto& g : all_graphs(6, true)) {
    const auto full = solve(g, GameRules::free_start());
    const auto restricted = solve_vs_policy(g, GameRules::free_start(), lowest, Player::Bob);
    EXPECT_LE(restricted.ratio(), full.ratio());
  }
}

TEST(SolverPolicy, IllegalPolicyMoveThrows) {
  ScriptedPolicy bad = [](const Graph&, const GameRules&, const GameState&) { return Move::to(0); };
  EXPECT_THROW(solve_vs_policy(fixtures::path(4), GameRules::free_start(), bad, Player::Bob), PolicyError);
}
