#include "tron/suites.hpp"

#include <algorithm>
#include <random>

#include "tron/analysis.hpp"
#include "tron/constructions.hpp"
#include "tron/enumerate.hpp"
#include "tron/graph_io.hpp"
#include "tron/reductions.hpp"
#include "tron/solver.hpp"

namespace tron {

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["passed"] = passed();
  j["checked"] = checked;
  j["skipped"] = skipped;
  j["budget_exhausted"] = budget_exhausted;
  j["failures"] = nlohmann::json::array();
  for (const auto& f : failures) j["failures"].push_back({{"description", f.description}, {"counterexample", f.counterexample}});
  j["details"] = details;
  return j;
}

namespace {

SolveOptions solve_options(const SuiteOptions& o) {
  SolveOptions s;
  s.node_budget = o.node_budget;
  return s;
}

nlohmann::json outcome_json(const Outcome& o) { return {{"alpha", o.alpha}, {"beta", o.beta}}; }

}  // namespace

SuiteReport verify_trees(const SuiteOptions& options) {
  SuiteReport r;
  r.suite = "trees";
  const std::size_t max_n = options.max_n ? options.max_n : 9;
  std::vector<std::size_t> per_size;
  for (std::size_t n = 2; n <= max_n; ++n) {
    auto trees = all_trees(n);
    per_size.push_back(trees.size());
    for (const auto& t : trees) {
      auto rep = verify_tree_lemma(t, solve_options(options));
      if (rep.status == LemmaStatus::BudgetExhausted) {
        ++r.budget_exhausted;
        continue;
      }
      ++r.checked;
      if (rep.status == LemmaStatus::Violated) {
        r.failures.push_back({"tree lemma violated: alpha=" + std::to_string(rep.outcome.alpha) +
                                  " beta=" + std::to_string(rep.outcome.beta),
                              {{"graph", to_json(t)}, {"outcome", outcome_json(rep.outcome)}}});
      }
    }
  }
  r.details["max_n"] = max_n;
  r.details["trees_per_size_from_2"] = per_size;
  return r;
}

SuiteReport verify_lemmas(const SuiteOptions& options) {
  SuiteReport r;
  r.suite = "lemmas";
  const std::size_t max_n = options.max_n ? options.max_n : 7;
  std::size_t super_checked = 0;
  std::size_t super_connected = 0;
  std::size_t deletion_checked = 0;
  std::size_t tie_resolved = 0;
  auto record = [&](const char* lemma, const Graph& g, const RatioLemmaReport& rep, std::size_t& counter) {
    switch (rep.status) {
      case LemmaStatus::Skipped: ++r.skipped; return;
      case LemmaStatus::BudgetExhausted: ++r.budget_exhausted; return;
      case LemmaStatus::Holds:
        ++counter;
        ++r.checked;
        if (rep.tie_resolved) ++tie_resolved;
        return;
      case LemmaStatus::Violated:
        ++counter;
        ++r.checked;
        r.failures.push_back({std::string(lemma) + " lemma violated: " + rep.lhs.str() + " < " + rep.rhs.str(),
                              {{"graph", to_json(g)},
                               {"base", outcome_json(rep.base)},
                               {"derived", outcome_json(rep.derived)}}});
    }
  };
  for (std::size_t n = 2; n <= max_n; ++n) {
    // No connected graph this small is Bob-favoured, so the super-vertex
    // lemma also runs over disconnected graphs such as two paths.
    for (const auto& g : all_graphs(n, false)) {
      const std::size_t before = super_checked;
      record("super-vertex", g, verify_supervertex_lemma(g, solve_options(options)), super_checked);
      if (super_checked > before && is_connected(g)) ++super_connected;
    }
    for (const auto& g : all_graphs(n, true))
      record("deletion", g, verify_deletion_lemma(g, solve_options(options)), deletion_checked);
  }
  for (std::size_t m = 4; m <= 6; ++m)
    record("super-vertex", two_paths(m), verify_supervertex_lemma(two_paths(m), solve_options(options)), super_checked);
  r.details["max_n"] = max_n;
  r.details["supervertex_checked"] = super_checked;
  r.details["supervertex_connected_checked"] = super_connected;
  r.details["deletion_checked"] = deletion_checked;
  r.details["deletion_tie_resolved"] = tie_resolved;
  return r;
}

SuiteReport verify_double_trees(const SuiteOptions&) {
  SuiteReport r;
  r.suite = "double-tree";
  for (std::size_t d : {2u, 3u}) {
    for (std::size_t h : {2u, 3u}) {
      DoubleTree t = double_tree(d, h);
      auto seq = double_tree_hamilton(t);
      auto check = check_hamilton_path(t.graph, seq);
      bool ends = !seq.empty() && seq.front() == t.params.upper_root && seq.back() == t.params.lower_root;
      ++r.checked;
      if (!check.valid || !ends)
        r.failures.push_back({"hamilton path invalid for d=" + std::to_string(d) + " h=" + std::to_string(h) + ": " +
                                  (check.valid ? std::string("wrong endpoints") : check.reason),
                              {{"graph", to_json(t.graph)}, {"sequence", seq}}});
    }
    DoubleTree t = double_tree(d, 2);
    std::size_t flow = vertex_connectivity(t.graph).kappa;
    std::size_t brute = vertex_connectivity_by_enumeration(t.graph);
    r.details["kappa_d" + std::to_string(d) + "_h2"] = {{"flow", flow}, {"enumeration", brute}};
    ++r.checked;
    if (flow != d || brute != d)
      r.failures.push_back({"double_tree(" + std::to_string(d) + ",2) connectivity flow=" + std::to_string(flow) +
                                " enumeration=" + std::to_string(brute),
                            {{"graph", to_json(t.graph)}}});
  }
  // Four leaves pairwise at distance >= 6 in some binary double-tree of height <= 8.
  std::optional<std::size_t> found;
  for (std::size_t h = 1; h <= 8 && !found; ++h) {
    DoubleTree t = double_tree(2, h);
    std::vector<Vertex> leaves = t.params.upper_leaves;
    leaves.insert(leaves.end(), t.params.lower_leaves.begin(), t.params.lower_leaves.end());
    auto pick = select_afar_leaves(t.graph, leaves, 4, 6);
    if (!pick) continue;
    bool ok = true;
    for (Vertex a : *pick) {
      auto dist = bfs_distances(t.graph, a);
      for (Vertex b : *pick)
        if (a != b && dist[b] < 6) ok = false;
    }
    if (!ok) {
      r.failures.push_back({"select_afar_leaves returned close leaves at h=" + std::to_string(h),
                            {{"graph", to_json(t.graph)}, {"leaves", *pick}}});
      break;
    }
    found = h;
    r.details["afar_leaves"] = {{"height", h}, {"leaves", *pick}};
  }
  ++r.checked;
  if (!found && r.failures.empty()) r.failures.push_back({"no height <= 8 yields 4 leaves at distance >= 6", {}});
  return r;
}

SuiteReport verify_connectivity(const SuiteOptions& options) {
  SuiteReport r;
  r.suite = "connectivity";
  const std::size_t max_n = options.max_n ? options.max_n : 7;
  for (std::size_t n = 2; n <= max_n; ++n) {
    for (const auto& g : all_graphs(n, false)) {
      ++r.checked;
      auto rep = vertex_connectivity(g);
      std::size_t brute = vertex_connectivity_by_enumeration(g);
      std::string problem;
      if (rep.kappa != brute) problem = "flow " + std::to_string(rep.kappa) + " != enumeration " + std::to_string(brute);
      if (problem.empty() && rep.witness_cut && rep.kappa > 0 &&
          (rep.witness_cut->count() != rep.kappa || !disconnects(g, *rep.witness_cut)))
        problem = "witness cut is not a minimum separator";
      for (const auto& w : rep.menger_paths)
        if (problem.empty() && (!valid_menger_witness(g, w) || w.paths.size() < rep.kappa))
          problem = "invalid Menger witness";
      if (!problem.empty()) r.failures.push_back({problem, {{"graph", to_json(g)}}});
    }
  }
  r.details["max_n"] = max_n;
  return r;
}

std::vector<Qbf> formula_sample(std::size_t n_max, std::size_t k_max, std::size_t cap, std::uint64_t seed) {
  std::vector<Qbf> all;
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::vector<Literal> lits;
    for (std::uint32_t v = 1; v <= n; ++v) {
      lits.push_back({v, false});
      lits.push_back({v, true});
    }
    std::vector<Clause> clauses;
    for (std::size_t a = 0; a < lits.size(); ++a)
      for (std::size_t b = a; b < lits.size(); ++b)
        for (std::size_t c = b; c < lits.size(); ++c) clauses.push_back({lits[a], lits[b], lits[c]});
    // Non-decreasing index tuples give each clause multiset once.
    for (std::size_t k = 1; k <= k_max; ++k) {
      std::vector<std::size_t> idx(k, 0);
      while (true) {
        Qbf phi;
        phi.variables = static_cast<std::uint32_t>(n);
        for (std::size_t i : idx) phi.clauses.push_back(clauses[i]);
        all.push_back(std::move(phi));
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == clauses.size() - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[i - 1];
      }
    }
  }
  if (cap == 0 || all.size() <= cap) return all;
  std::mt19937_64 rng(seed);
  std::vector<Qbf> picked;
  std::vector<char> taken(all.size(), 0);
  // Keep one false formula first so both outcomes are represented.
  for (std::size_t i = 0; i < all.size() && picked.size() < 1; ++i)
    if (!qbf_eval(all[i])) {
      picked.push_back(all[i]);
      taken[i] = 1;
    }
  for (std::size_t i = 0; i < all.size() && picked.size() < 2; ++i)
    if (!taken[i] && qbf_eval(all[i])) {
      picked.push_back(all[i]);
      taken[i] = 1;
    }
  std::vector<std::size_t> order(all.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t i : order) {
    if (picked.size() >= cap) break;
    if (taken[i]) continue;
    picked.push_back(all[i]);
    taken[i] = 1;
  }
  return picked;
}

SuiteReport verify_qbf_equivalence(const SuiteOptions& options) {
  SuiteReport r;
  r.suite = options.undirected ? "qbf-equivalence-undirected" : "qbf-equivalence";
  auto formulas = formula_sample(options.variables, options.clauses, options.samples, options.seed);
  std::size_t trues = 0;
  std::size_t falses = 0;
  std::uint64_t max_nodes = 0;
  std::size_t max_vertices = 0;
  nlohmann::json exhausted = nlohmann::json::array();
  for (const auto& phi : formulas) {
    ReductionOutput red = options.undirected ? build_G_phi_prime(phi) : build_G_phi(phi);
    max_vertices = std::max(max_vertices, red.graph.vertex_count());
    SolveResult res = solve(red.graph, red.rules(Objective::Classification), solve_options(options));
    max_nodes = std::max(max_nodes, res.nodes_expanded);
    if (res.budget_exhausted) {
      ++r.budget_exhausted;
      exhausted.push_back(to_string(phi));
      continue;
    }
    ++r.checked;
    bool truth = qbf_eval(phi);
    (truth ? trues : falses) += 1;
    bool alice = res.classification() == Classification::AliceWins;
    if (alice != truth)
      r.failures.push_back({"Alice-wins=" + std::string(alice ? "true" : "false") + " but formula is " +
                                (truth ? "true" : "false") + ": " + to_string(phi),
                            {{"qdimacs", to_qdimacs(phi)},
                             {"reduction", to_json(red)},
                             {"outcome", outcome_json(res.outcome)}}});
  }
  r.details["formulas"] = formulas.size();
  r.details["true_formulas"] = trues;
  r.details["false_formulas"] = falses;
  r.details["max_nodes"] = max_nodes;
  r.details["max_vertices"] = max_vertices;
  r.details["budget_exhausted_formulas"] = exhausted;
  return r;
}

SuiteReport verify_h_properties(const SuiteOptions& options) {
  SuiteReport r;
  r.suite = "h-properties";
  const std::size_t max_n = options.max_n ? options.max_n : 3;
  std::size_t h_checked = 0;
  std::size_t hp_checked = 0;
  std::size_t f_checked = 0;
  auto alice_wins = [](const SolveResult& s) { return s.classification() == Classification::AliceWins; };
  for (std::size_t n = 2; n <= max_n; ++n) {
    for (const auto& g : all_directed_graphs(n)) {
      for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = 0; b < n; ++b) {
          if (a == b) continue;
          auto base = solve(g, GameRules::given_start(a, b, Objective::Classification), solve_options(options));
          auto h = build_H(g, a, b);
          auto res = solve(h.graph, h.rules(Objective::Classification), solve_options(options));
          if (base.budget_exhausted || res.budget_exhausted) {
            ++r.budget_exhausted;
            continue;
          }
          ++r.checked;
          ++h_checked;
          if (alice_wins(base) != alice_wins(res))
            r.failures.push_back({"H equivalence fails for v1=" + std::to_string(a) + " v2=" + std::to_string(b),
                                  {{"graph", to_json(g)}, {"v1", a}, {"v2", b}}});
        }
      }
    }
  }
  for (std::size_t n = 2; n <= max_n; ++n) {
    for (const auto& g : all_graphs(n, true)) {
      for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = 0; b < n; ++b) {
          if (a == b) continue;
          auto hp = build_H_prime(g, a, b);
          for (const auto& p : check_h_prime_properties(hp, solve_options(options))) {
            if (p.status == LemmaStatus::BudgetExhausted) {
              ++r.budget_exhausted;
              continue;
            }
            ++r.checked;
            ++hp_checked;
            if (p.status == LemmaStatus::Violated)
              r.failures.push_back({"H' property " + p.name + " fails: " + p.detail,
                                    {{"graph", to_json(g)}, {"v1", a}, {"v2", b}}});
          }
        }
      }
    }
  }
  for (const auto& g : all_graphs(2, false)) {
    for (Vertex a = 0; a < 2; ++a) {
      Vertex b = 1 - a;
      auto base = solve(g, GameRules::given_start(a, b, Objective::Classification), solve_options(options));
      auto f = build_F(g, a, b);
      auto res = solve(f.graph, f.rules(Objective::Classification), solve_options(options));
      if (base.budget_exhausted || res.budget_exhausted) {
        ++r.budget_exhausted;
        continue;
      }
      ++r.checked;
      ++f_checked;
      if (alice_wins(base) != alice_wins(res))
        r.failures.push_back({"F equivalence fails for v1=" + std::to_string(a),
                              {{"graph", to_json(g)}, {"v1", a}, {"v2", b}}});
    }
  }
  r.details["max_n"] = max_n;
  r.details["h_instances"] = h_checked;
  r.details["h_prime_property_checks"] = hp_checked;
  r.details["f_instances"] = f_checked;
  return r;
}

std::vector<std::string> suite_names() {
  return {"trees", "lemmas", "double-tree", "connectivity", "qbf-equivalence", "h-properties"};
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "trees") return verify_trees(options);
  if (name == "lemmas") return verify_lemmas(options);
  if (name == "double-tree") return verify_double_trees(options);
  if (name == "connectivity") return verify_connectivity(options);
  if (name == "qbf-equivalence") return verify_qbf_equivalence(options);
  if (name == "h-properties") return verify_h_properties(options);
  throw InvalidInput("unknown suite '" + name + "'");
}

}  // namespace tron
