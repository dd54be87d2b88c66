#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "tron/game.hpp"
#include "tron/graph.hpp"

namespace tron {

struct SolveOptions {
  /// Expanded-node cap; exceeding it flags the result as non-exact.
  std::optional<std::uint64_t> node_budget;
  /// false selects the linear-space mode: no transposition table, no caches.
  bool memoize = true;
  /// Transposition-table entry cap; further states are searched but not stored.
  std::size_t memo_limit = 8'000'000;
};

struct SolveResult {
  Outcome outcome;
  std::vector<Move> principal_variation;
  std::uint64_t nodes_expanded = 0;
  std::size_t max_stack_depth = 0;
  bool budget_exhausted = false;

  Classification classification() const { return outcome.classification(); }
  Ratio ratio() const { return outcome.ratio(); }
};

/// Deterministic strategy for one player. Must return a move that is legal in
/// the given state; the solver rejects anything else.
using ScriptedPolicy = std::function<Move(const Graph&, const GameRules&, const GameState&)>;

/// Thrown when a scripted policy proposes an illegal move.
class PolicyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact minimax value. Ratio objective: Bob maximizes beta/alpha and Alice
/// minimizes it. Classification objective: three-valued minimax with Alice
/// preferring AliceWins. Equal-valued moves resolve to the lowest vertex,
/// passes last.
SolveResult solve(const Graph& g, const GameRules& rules, const SolveOptions& options = {});

/// Same search started from an arbitrary reachable state.
SolveResult solve_from(const Graph& g, const GameRules& rules, const GameState& start,
                       const SolveOptions& options = {});

/// One side follows `policy`, the other optimizes under rules.objective.
SolveResult solve_vs_policy(const Graph& g, const GameRules& rules, const ScriptedPolicy& policy,
                            Player scripted_side, const SolveOptions& options = {});

SolveResult solve_vs_policy_from(const Graph& g, const GameRules& rules, const GameState& start,
                                 const ScriptedPolicy& policy, Player scripted_side,
                                 const SolveOptions& options = {});

/// Solved outcome after each possible Alice placement (free placement only).
std::map<Vertex, SolveResult> optimal_start_report(const Graph& g, const GameRules& rules,
                                                   const SolveOptions& options = {});

/// Largest vertex count the memoized search accepts.
inline constexpr std::size_t kMaxSolverVertices = 512;

}  // namespace tron
