#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tron/game.hpp"
#include "tron/graph.hpp"
#include "tron/solver.hpp"

namespace tron {

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

// ---------------------------------------------------------------------------
// Connectivity

struct MengerWitness {
  Vertex source;
  Vertex target;
  /// Internally vertex-disjoint paths, each listed source..target.
  std::vector<std::vector<Vertex>> paths;
};

struct ConnectivityReport {
  std::size_t kappa = 0;
  /// Minimum vertex cut. Empty when the graph is complete (no cut exists) or
  /// already disconnected (the empty set is the cut).
  std::optional<VertexSet> witness_cut;
  std::vector<MengerWitness> menger_paths;
};

/// Exact vertex connectivity through unit-capacity max-flow with vertex
/// splitting. Complete graphs report n-1; disconnected graphs report 0.
ConnectivityReport vertex_connectivity(const Graph& g);

/// Maximum number of internally disjoint s-t paths, capped at `limit`,
/// together with the paths themselves. s and t must not be adjacent for the
/// count to equal the local connectivity.
MengerWitness disjoint_paths(const Graph& g, Vertex s, Vertex t, std::size_t limit = ~std::size_t{0});

/// Independent oracle: smallest vertex subset whose removal disconnects the
/// graph, by enumerating subsets in increasing size. Exponential.
std::size_t vertex_connectivity_by_enumeration(const Graph& g);

/// True when removing `cut` leaves the remaining vertices disconnected.
bool disconnects(const Graph& g, const VertexSet& cut);

/// Checks that the witness paths are valid s-t paths in g and pairwise
/// share only their endpoints.
bool valid_menger_witness(const Graph& g, const MengerWitness& w);

// ---------------------------------------------------------------------------
// Paths

struct LongestPath {
  std::size_t length = 0;  ///< edges
  std::vector<Vertex> path;
  std::uint64_t nodes = 0;
  bool budget_exhausted = false;
};

/// Exact longest simple path (direction respected). Vertices in
/// `forbidden_transit` may appear only as the first vertex of the path.
/// Without a source every start is tried.
LongestPath longest_path_length(const Graph& g, std::optional<Vertex> source, const VertexSet& forbidden_transit,
                                std::optional<std::uint64_t> node_budget = std::nullopt);

struct HamiltonCheck {
  bool valid = false;
  /// Index into the sequence where the first problem was found.
  std::optional<std::size_t> violation_index;
  std::string reason;
};

HamiltonCheck check_hamilton_path(const Graph& g, const std::vector<Vertex>& seq);

// ---------------------------------------------------------------------------
// Lemma verifiers

enum class LemmaStatus { Holds, Violated, Skipped, BudgetExhausted };
std::string to_string(LemmaStatus s);

struct TreeLemmaReport {
  LemmaStatus status = LemmaStatus::Skipped;
  Outcome outcome;
  bool alice_bound = false;  ///< alpha <= beta + 1
  bool bob_bound = false;    ///< beta <= 2 alpha
};

/// Solves the tree (ratio objective, free starts) and checks both bounds.
/// Throws InvalidInput when `t` is not a tree.
TreeLemmaReport verify_tree_lemma(const Graph& t, const SolveOptions& options = {});

struct RatioLemmaReport {
  LemmaStatus status = LemmaStatus::Skipped;
  Outcome base;      ///< solved outcome on the input graph
  Outcome derived;   ///< solved outcome on the modified graph
  Ratio lhs;         ///< quantity the lemma bounds from below
  Ratio rhs;
  /// The solver's representative outcome on the modified graph missed the
  /// bound but another outcome of equal ratio under optimal play met it.
  bool tie_resolved = false;
};

/// Every distinct terminal outcome reachable when both players only play
/// value-optimal moves. Empty when a solve exhausts the budget.
std::vector<Outcome> optimal_outcomes(const Graph& g, const GameRules& rules, const SolveOptions& options = {});

/// Adds a vertex adjacent to everything and checks
/// (alpha/beta) on the new graph >= (beta/alpha) on the old one.
/// Skipped unless the input is Bob-favored (beta/alpha > 1).
RatioLemmaReport verify_supervertex_lemma(const Graph& g, const SolveOptions& options = {});

/// Deletes a solver-optimal Alice start and checks
/// ((beta+1)/alpha) on the smaller graph >= (alpha/beta) on the original.
/// The left side is not a function of the ratio value, so every optimal-play
/// outcome of the smaller graph is tried before reporting a violation.
/// Skipped unless the input is Alice-favored (beta/alpha < 1).
RatioLemmaReport verify_deletion_lemma(const Graph& g, const SolveOptions& options = {});

}  // namespace tron
