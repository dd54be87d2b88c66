#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "tron/enumerate.hpp"
#include "tron/reductions.hpp"
#include "tron/suites.hpp"

using namespace tron;

namespace {

Qbf parse(const char* text) { return parse_qdimacs(text); }

bool alice_wins_given(const Graph& g, Vertex a, Vertex b) {
  oracle::Rules r;
  r.given = {a, b};
  r.classification = true;
  return oracle::verdict(oracle::minimax(g, r)) < 0;
}

}  // namespace

TEST(StageNames, RoundTrip) {
  for (Stage s : {Stage::GPhi, Stage::GPhiPrime, Stage::H, Stage::HPrime, Stage::F})
    EXPECT_EQ(stage_from_string(to_string(s)), s);
  EXPECT_THROW(stage_from_string("nope"), InvalidInput);
}

TEST(GPhi, DirectedWithLandmarks) {
  auto red = build_G_phi(parse("p cnf 2 2\ne 1 0\na 2 0\n1 2 1 0\n-1 -2 2 0\n"));
  EXPECT_TRUE(red.graph.directed());
  EXPECT_EQ(red.graph.at("v1"), *red.alice_start);
  EXPECT_EQ(red.graph.at("v2"), *red.bob_start);
  EXPECT_EQ(red.groups.at("clauses").size(), 2u);
  EXPECT_TRUE(red.calibration.contains("vertex_formula"));
}

TEST(GPhi, SingleClauseIsPadded) {
  auto red = build_G_phi(parse("p cnf 1 1\ne 1 0\n1 1 1 0\n"));
  EXPECT_EQ(red.groups.at("clauses").size(), kMinClausesDirected);
  EXPECT_EQ(red.calibration.at("clause_padding").get<std::size_t>(), kMinClausesDirected - 1);
}

TEST(GPhi, WinnerMatchesFormulaAgainstBruteForce) {
  for (const auto& phi : formula_sample(2, 2, 60, 5)) {
    auto red = build_G_phi(phi);
    EXPECT_EQ(alice_wins_given(red.graph, *red.alice_start, *red.bob_start), qbf_eval(phi)) << to_string(phi);
  }
}

TEST(GPhiPrime, UndirectedAndCalibrated) {
  Qbf phi = parse("p cnf 2 1\ne 1 0\na 2 0\n1 -2 1 0\n");
  auto red = build_G_phi_prime(phi);
  EXPECT_FALSE(red.graph.directed());
  EXPECT_EQ(red.groups.at("clauses").size(), kMinClausesUndirected);
  auto cal = GPhiPrimeCalibration::defaults(2, 4);
  EXPECT_EQ(cal.slow_path, 2 * 4 + 2u);
  EXPECT_EQ(cal.spare_path, 2 * 2 + 4u);
  cal.slow_path = 0;
  EXPECT_THROW(build_G_phi_prime(phi, cal), InvalidInput);
}

TEST(GPhiPrime, WinnerMatchesFormulaOnSmallSample) {
  for (const auto& phi : formula_sample(1, 2, 8, 2)) {
    auto red = build_G_phi_prime(phi);
    const auto r = solve(red.graph, red.rules(Objective::Classification));
    ASSERT_FALSE(r.budget_exhausted);
    EXPECT_EQ(r.classification() == Classification::AliceWins, qbf_eval(phi)) << to_string(phi);
  }
}

TEST(OverheadH, FreeStartEquivalenceOnTwoVertices) {
  for (const auto& g : all_directed_graphs(2)) {
    auto red = build_H(g, 0, 1);
    EXPECT_TRUE(red.graph.directed());
    EXPECT_FALSE(red.alice_start);
    const auto r = solve(red.graph, red.rules(Objective::Classification));
    EXPECT_EQ(r.classification() == Classification::AliceWins, alice_wins_given(g, 0, 1));
  }
}

TEST(OverheadHPrime, PropertiesHoldOnPaths) {
  for (std::size_t n : {2u, 3u}) {
    auto red = build_H_prime(fixtures::path(n), 0, 1);
    EXPECT_FALSE(red.graph.directed());
    auto props = check_h_prime_properties(red);
    ASSERT_EQ(props.size(), 5u);
    for (const auto& p : props) EXPECT_EQ(p.status, LemmaStatus::Holds) << p.name << ": " << p.detail;
    auto d = bfs_distances(red.graph, red.graph.at("s1"));
    EXPECT_GE(d[red.graph.at("s2")], 3u);
  }
}

TEST(OverheadF, GroupsAndJsonRoundTrip) {
  auto red = build_F(fixtures::path(2), 0, 1);
  EXPECT_EQ(red.groups.at("dot").size(), 3u);
  EXPECT_EQ(red.groups.at("box").size(), 3u);
  EXPECT_EQ(red.graph.at("t1"), red.groups.at("box")[0]);
  auto back = reduction_from_json(to_json(red));
  EXPECT_EQ(back.stage, Stage::F);
  EXPECT_TRUE(back.graph == red.graph);
  EXPECT_EQ(back.groups, red.groups);
}

TEST(OverheadF, RejectsBadStarts) {
  EXPECT_THROW(build_F(fixtures::path(2), 0, 0), InvalidInput);
  EXPECT_THROW(build_H_prime(fixtures::path(2), 0, 5), InvalidInput);
}
