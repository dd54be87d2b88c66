#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tron/analysis.hpp"
#include "tron/game.hpp"
#include "tron/graph.hpp"
#include "tron/qbf.hpp"
#include "tron/solver.hpp"

namespace tron {

enum class Stage { GPhi, GPhiPrime, H, HPrime, F };
std::string to_string(Stage s);
Stage stage_from_string(const std::string& s);

struct ReductionOutput {
  Stage stage = Stage::GPhi;
  Graph graph;
  std::optional<Vertex> alice_start;
  std::optional<Vertex> bob_start;
  /// Named vertex sets (clauses, branch vertices, dot/box groups).
  std::map<std::string, std::vector<Vertex>> groups;
  /// Every length constant the builder used.
  nlohmann::json calibration = nlohmann::json::object();

  /// Given-start rules when both starts are set, free starts otherwise.
  GameRules rules(Objective objective = Objective::Classification) const;
};

/// {"provenance": {"stage": ...}, "graph": ..., "landmarks": {...},
///  "groups": {...}, "calibration": {...}, "alice_start", "bob_start"}
nlohmann::json to_json(const ReductionOutput& r);
ReductionOutput reduction_from_json(const nlohmann::json& j);

/// Clause counts below these are padded by repeating clauses cyclically
/// (calibration.clause_padding counts the copies). With a single clause
/// Alice reaches it before Bob's chain can; with fewer than four clauses the
/// split queue forces Alice to pick her branch before Bob's route through the
/// clause cycle is fixed.
inline constexpr std::size_t kMinClausesDirected = 2;
inline constexpr std::size_t kMinClausesUndirected = 4;

/// Directed, given starts. Alice's chain carries the existential diamonds,
/// Bob's the universal ones, each opposite a two-move relay.
ReductionOutput build_G_phi(const Qbf& phi);

struct GPhiPrimeCalibration {
  std::size_t slow_path = 0;      ///< clause to branch vertex, edges (2k+n)
  std::size_t queue_stem = 2;     ///< entry vertices before the split
  std::size_t queue_branch = 1;   ///< vertices per branch
  std::size_t bob_delay = 1;      ///< moves from Bob's last junction to a clause
  std::size_t dummy_path = 0;     ///< clause to dummy, edges
  std::size_t spare_path = 0;     ///< vertices hung on branch vertices and the dummy (2n+k)
  std::size_t clause_padding = 0;

  static GPhiPrimeCalibration defaults(std::size_t n, std::size_t k);
  nlohmann::json to_json() const;
};

/// Undirected, given starts: G_phi without directions plus slow paths,
/// branching queue, private dummy paths and spare paths.
ReductionOutput build_G_phi_prime(const Qbf& phi);
ReductionOutput build_G_phi_prime(const Qbf& phi, const GPhiPrimeCalibration& cal);

/// Directed, free starts: Alice wins H(g) iff she wins g from (v1, v2).
ReductionOutput build_H(const Graph& g, Vertex v1, Vertex v2);

/// Undirected counterpart with l_low = 4n, l_up = 5n.
ReductionOutput build_H_prime(const Graph& g, Vertex v1, Vertex v2);

/// Two copies of H'(g) joined through t1, t2 by ten connector edges.
ReductionOutput build_F(const Graph& g, Vertex v1, Vertex v2);

struct PropertyResult {
  std::string name;
  LemmaStatus status = LemmaStatus::Skipped;
  std::string detail;
};

/// p1: from (s1, s2) Alice's u1 and Bob's u2 are optimal first moves.
/// p2: from (s2, s1) Bob wins.
/// p3: with s1, s2 usable only as starts, s1 is the unique start of a longest path.
/// p4: every simple s1-s2 path leaves an auxiliary neighbour of s2 unused.
/// p5: dist(s1, s2) >= 3.
std::vector<PropertyResult> check_h_prime_properties(const ReductionOutput& h_prime, const SolveOptions& options = {});

}  // namespace tron
