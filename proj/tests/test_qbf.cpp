#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "tron/graph.hpp"
#include "tron/qbf.hpp"
#include "tron/suites.hpp"

using namespace tron;

namespace {

// Reference evaluator: game tree over assignment bitmasks.
bool reference_eval(const Qbf& phi) {
  std::function<bool(std::uint32_t, std::uint32_t)> go = [&](std::uint32_t var, std::uint32_t mask) {
    if (var > phi.variables) {
      for (const auto& c : phi.clauses) {
        bool sat = false;
        for (const auto& lit : c) sat = sat || (((mask >> lit.var) & 1u) != 0) != lit.negated;
        if (!sat) return false;
      }
      return true;
    }
    const bool f = go(var + 1, mask);
    const bool t = go(var + 1, mask | (1u << var));
    return var % 2 == 1 ? (f || t) : (f && t);
  };
  return go(1, 0);
}

std::string message_of(std::string_view text) {
  try {
    parse_qdimacs(text);
  } catch (const InvalidInput& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(Qdimacs, ParsesAndRoundTrips) {
  const char* text = "c comment\np cnf 3 2\ne 1 0\na 2 0\ne 3 0\n1 -2 3 0\n-1 2 -3 0\n";
  Qbf phi = parse_qdimacs(text);
  EXPECT_EQ(phi.variables, 3u);
  ASSERT_EQ(phi.clauses.size(), 2u);
  EXPECT_TRUE(phi.clauses[0][1].negated);
  Qbf back = parse_qdimacs(to_qdimacs(phi));
  EXPECT_EQ(back.variables, phi.variables);
  EXPECT_EQ(back.clauses, phi.clauses);
}

TEST(Qdimacs, ErrorsCarryLineNumbers) {
  EXPECT_NE(message_of("p cnf 1 1\ne 1 0\n1 1 0\n").find("line 3"), std::string::npos);
  EXPECT_NE(message_of("p cnf 1 1\ne 1 0\n1 1 0\n").find("expected 3"), std::string::npos);
  EXPECT_NE(message_of("p cnf 2 1\na 1 0\ne 2 0\n1 2 1 0\n").find("line 2"), std::string::npos);
  EXPECT_NE(message_of("p cnf 1 1\ne 1 0\n1 2 1 0\n").find("line 3"), std::string::npos);
  EXPECT_NE(message_of("p cnf 2 1\ne 1 0\ne 2 0\n1 2 1 0\n").find("line 3"), std::string::npos);
  EXPECT_FALSE(message_of("p cnf 1 2\ne 1 0\n1 1 1 0\n").empty());
  EXPECT_FALSE(message_of("").empty());
}

TEST(QbfEval, MatchesReferenceOnEnumeratedFormulas) {
  const auto all = formula_sample(2, 2, 0, 1);
  std::size_t trues = 0;
  for (const auto& phi : all) {
    EXPECT_EQ(qbf_eval(phi), reference_eval(phi)) << to_string(phi);
    trues += qbf_eval(phi) ? 1 : 0;
  }
  EXPECT_GT(trues, 0u);
  EXPECT_LT(trues, all.size());
}

TEST(QbfEval, MatchesReferenceOnRandomFormulas) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    Qbf phi;
    phi.variables = 1 + rng() % 6;
    const std::size_t k = 1 + rng() % 5;
    for (std::size_t c = 0; c < k; ++c) {
      Clause clause;
      for (int i = 0; i < 3; ++i) clause.push_back({1 + static_cast<std::uint32_t>(rng() % phi.variables), rng() % 2 == 0});
      phi.clauses.push_back(clause);
    }
    EXPECT_EQ(qbf_eval(phi), reference_eval(phi)) << to_string(phi);
  }
}

TEST(FormulaSample, DeterministicAndCapped) {
  const auto a = formula_sample(3, 2, 50, 11);
  const auto b = formula_sample(3, 2, 50, 11);
  ASSERT_EQ(a.size(), 50u);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(to_qdimacs(a[i]), to_qdimacs(b[i]));
  bool any_true = false;
  bool any_false = false;
  for (const auto& phi : a) (qbf_eval(phi) ? any_true : any_false) = true;
  EXPECT_TRUE(any_true);
  EXPECT_TRUE(any_false);
}

TEST(FormulaSample, EnumeratesClauseMultisets) {
  // one variable: 4 literal multisets of size 3 over {x1, -x1}
  EXPECT_EQ(formula_sample(1, 1, 0, 1).size(), 4u);
  // k = 2 adds unordered pairs with repetition: 4 * 5 / 2
  EXPECT_EQ(formula_sample(1, 2, 0, 1).size(), 4u + 10u);
}
