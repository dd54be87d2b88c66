#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tron/graph.hpp"
#include "tron/qbf.hpp"

namespace tron {

struct SuiteOptions {
  std::size_t max_n = 0;  ///< 0 selects the suite default
  std::optional<std::uint64_t> node_budget;
  std::uint64_t seed = 1;
  std::size_t variables = 3;
  std::size_t clauses = 2;
  /// Cap on sampled instances; 0 means every enumerated instance.
  std::size_t samples = 0;
  bool undirected = false;  ///< qbf-equivalence: use the undirected builder
};

struct SuiteFailure {
  std::string description;
  nlohmann::json counterexample;
};

struct SuiteReport {
  std::string suite;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::size_t budget_exhausted = 0;
  std::vector<SuiteFailure> failures;
  nlohmann::json details = nlohmann::json::object();

  bool passed() const { return failures.empty(); }
  nlohmann::json to_json() const;
};

/// Tree lemma over every tree with at most max_n (default 9) vertices.
SuiteReport verify_trees(const SuiteOptions& options);

/// Super-vertex and deletion lemmas over connected graphs with at most max_n
/// (default 7) vertices.
SuiteReport verify_lemmas(const SuiteOptions& options);

/// Hamilton paths for (d, h) in {2,3}x{2,3}, connectivity of double_tree(d, 2)
/// against cut enumeration, afar leaves for d = 2.
SuiteReport verify_double_trees(const SuiteOptions& options);

/// Max-flow connectivity against subset enumeration plus witness checks over
/// every graph with at most max_n (default 7) vertices.
SuiteReport verify_connectivity(const SuiteOptions& options);

/// Alice wins the reduction graph iff the formula is true.
SuiteReport verify_qbf_equivalence(const SuiteOptions& options);

/// H equivalence over directed graphs with at most max_n (default 3)
/// vertices, H' properties p1-p5 over connected graphs of the same size, and
/// F equivalence on two-vertex graphs.
SuiteReport verify_h_properties(const SuiteOptions& options);

/// Every formula with 1..n variables and 1..k clauses, clauses drawn as
/// sorted literal triples and the clause list as a sorted multiset. When
/// `cap` is non-zero a seeded subsample of that size is returned, always
/// keeping at least one true and one false formula when both exist.
std::vector<Qbf> formula_sample(std::size_t n, std::size_t k, std::size_t cap, std::uint64_t seed);

std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace tron
