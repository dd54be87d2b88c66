// tron: generate constructions, solve games, compile reductions, run suites.
// Exit codes: 0 ok/pass, 1 check failed, 2 bad input or usage, 3 budget exhausted.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tron/constructions.hpp"
#include "tron/graph_io.hpp"
#include "tron/policies.hpp"
#include "tron/qbf.hpp"
#include "tron/reductions.hpp"
#include "tron/solver.hpp"
#include "tron/suites.hpp"

namespace {

using nlohmann::json;
using namespace tron;

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw InvalidInput("cannot write '" + out_path + "'");
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

// A vertex is either an index or a label.
Vertex resolve_vertex(const Graph& g, const std::string& token) {
  if (!token.empty() && token.find_first_not_of("0123456789") == std::string::npos) {
    unsigned long v = std::stoul(token);
    if (v >= g.vertex_count()) throw InvalidInput("vertex " + token + " out of range");
    return static_cast<Vertex>(v);
  }
  if (auto v = g.find_label(token)) return *v;
  throw InvalidInput("unknown vertex label '" + token + "'");
}

std::optional<std::uint64_t> env_budget() {
  if (const char* s = std::getenv("TRON_NODE_BUDGET"); s && *s) return std::stoull(s);
  return std::nullopt;
}

// Graph documents may be plain graphs or reduction outputs.
struct LoadedGraph {
  Graph graph;
  std::optional<ReductionOutput> reduction;
};

LoadedGraph load_graph(const std::string& path) {
  json j = json::parse(read_file(path));
  if (j.contains("provenance")) {
    ReductionOutput r = reduction_from_json(j);
    Graph g = r.graph;
    return {std::move(g), std::move(r)};
  }
  return {graph_from_json(j), std::nullopt};
}

Graph line_graph(std::size_t n, bool cycle) {
  GraphBuilder b;
  b.add_vertices(n);
  for (std::size_t i = 0; i + 1 < n; ++i) b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  if (cycle && n > 2) b.add_edge(static_cast<Vertex>(n - 1), 0);
  return b.build();
}

Graph complete_graph(std::size_t n) {
  GraphBuilder b;
  b.add_vertices(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return b.build();
}

json visage_json(const Visage& v) {
  json j = to_json(v.graph);
  j["construction"] = {{"variant", to_string(v.params.variant)},
                       {"scale", v.params.scale},
                       {"spacing", v.params.spacing},
                       {"k", v.params.k},
                       {"height", v.params.height},
                       {"overhead", v.params.overhead},
                       {"box", v.params.box},
                       {"cross", v.params.cross},
                       {"box_attachments", v.params.box_attachments},
                       {"cross_attachments", v.params.cross_attachments}};
  return j;
}

json solve_json(const Graph& g, const SolveResult& r, Objective objective) {
  json pv = json::array();
  for (const Move& m : r.principal_variation) {
    if (m.is_pass())
      pv.push_back("pass");
    else
      pv.push_back(m.vertex());
  }
  json j{{"classification", to_string(r.classification())},
         {"alpha", r.outcome.alpha},
         {"beta", r.outcome.beta},
         {"ratio", r.ratio().str()},
         {"objective", to_string(objective)},
         {"nodes_expanded", r.nodes_expanded},
         {"max_stack_depth", r.max_stack_depth},
         {"budget_exhausted", r.budget_exhausted},
         {"vertices", g.vertex_count()},
         {"principal_variation", pv}};
  return j;
}

struct GenArgs {
  std::string out;
  bool dot = false;
  std::size_t m = 4;
  std::size_t l = 2;
  std::size_t overhead_m = 4;
  std::string variant = "bob";
  std::size_t length = 40;
  std::size_t spacing = 4;
  std::size_t d = 2;
  std::size_t h = 2;
  std::size_t k = 2;
  std::size_t tree_h = 0;
  std::size_t overhead_len = 2;
  std::size_t n = 4;
  std::string graph;
};

int run_gen(const std::string& which, const GenArgs& a) {
  std::string name = which;
  json doc;
  Graph g;
  if (which == "two-paths") {
    g = two_paths(a.m);
  } else if (which == "path") {
    g = line_graph(a.n, false);
  } else if (which == "cycle") {
    g = line_graph(a.n, true);
  } else if (which == "complete") {
    g = complete_graph(a.n);
  } else if (which == "visage") {
    Visage v = visage(a.l, two_paths(a.overhead_m));
    g = v.graph;
    doc = visage_json(v);
  } else if (which == "planar-visage") {
    VisageVariant var;
    if (a.variant == "bob")
      var = VisageVariant::PlanarBob;
    else if (a.variant == "alice")
      var = VisageVariant::PlanarAlice;
    else
      throw InvalidInput("variant must be bob or alice");
    Visage v = planar_visage(var, a.length, a.spacing, two_paths(a.overhead_m));
    g = v.graph;
    doc = visage_json(v);
  } else if (which == "double-tree") {
    DoubleTree t = double_tree(a.d, a.h);
    g = t.graph;
    doc = to_json(g);
    doc["hamilton_path"] = double_tree_hamilton(t);
  } else if (which == "k-visage") {
    std::size_t h = a.tree_h;
    if (h == 0) {
      auto found = minimal_afar_height(a.k);
      if (!found) throw InvalidInput("no double-tree height up to 8 provides afar leaves");
      h = *found;
    }
    Visage v = k_connected_visage(a.k, h, a.overhead_len);
    g = v.graph;
    doc = visage_json(v);
  } else if (which == "super") {
    if (a.graph.empty()) throw InvalidInput("super needs --graph");
    g = add_super_vertex(load_graph(a.graph).graph);
  } else {
    throw InvalidInput("unknown construction '" + which + "'");
  }
  if (a.dot) {
    for (char& c : name)
      if (c == '-') c = '_';
    emit(to_dot(g, name), a.out);
  } else {
    if (doc.is_null()) doc = to_json(g);
    emit(doc.dump(2), a.out);
  }
  return 0;
}

struct SolveArgs {
  std::string file;
  std::vector<std::string> given;
  std::size_t handicap = 0;
  std::vector<std::string> whitelist;
  std::string objective = "ratio";
  std::optional<std::uint64_t> budget;
  std::string policy;
  bool linear = false;
  bool no_budget = false;
};

int run_solve(const SolveArgs& a) {
  LoadedGraph loaded = load_graph(a.file);
  const Graph& g = loaded.graph;
  Objective obj;
  if (a.objective == "ratio")
    obj = Objective::Ratio;
  else if (a.objective == "classification")
    obj = Objective::Classification;
  else
    throw InvalidInput("objective must be ratio or classification");

  GameRules rules = loaded.reduction ? loaded.reduction->rules(obj) : GameRules::free_start(obj);
  if (!a.given.empty()) rules.given = GivenStarts{resolve_vertex(g, a.given[0]), resolve_vertex(g, a.given[1])};
  if (a.handicap > 0) {
    rules.given.reset();
    rules.alice_handicap = a.handicap;
  }
  if (!a.whitelist.empty()) {
    VertexSet w(g.vertex_count());
    for (const auto& t : a.whitelist) w.insert(resolve_vertex(g, t));
    rules.bob_whitelist = w;
  }
  validate_rules(g, rules);

  SolveOptions opts;
  opts.node_budget = a.budget ? a.budget : env_budget();
  if (a.no_budget) opts.node_budget.reset();
  opts.memoize = !a.linear;

  SolveResult r;
  if (a.policy.empty()) {
    r = solve(g, rules, opts);
  } else if (a.policy == "visage-bob") {
    r = solve_vs_policy(g, rules, visage_bob_policy(g), Player::Bob, opts);
  } else if (a.policy == "planar-visage-alice") {
    r = solve_vs_policy(g, rules, planar_visage_alice_policy(g), Player::Alice, opts);
  } else {
    throw InvalidInput("unknown policy '" + a.policy + "'");
  }
  json out = solve_json(g, r, obj);
  if (!a.policy.empty()) out["policy"] = a.policy;
  emit(out.dump(2), "");
  return r.budget_exhausted ? kExitBudget : 0;
}

struct ReduceArgs {
  std::string input;
  std::string graph;
  std::string v1;
  std::string v2;
  std::string out;
  bool dot = false;
};

int run_reduce(const std::string& stage_name, const ReduceArgs& a) {
  Stage stage = stage_from_string(stage_name == "g-phi"         ? "G_phi"
                                  : stage_name == "g-phi-prime" ? "G_phi_prime"
                                  : stage_name == "h"           ? "H"
                                  : stage_name == "h-prime"     ? "H_prime"
                                  : stage_name == "f"           ? "F"
                                                                : stage_name);
  ReductionOutput red;
  if (stage == Stage::GPhi || stage == Stage::GPhiPrime) {
    if (a.input.empty()) throw InvalidInput(stage_name + " needs a QDIMACS file");
    Qbf phi = parse_qdimacs(read_file(a.input));
    red = stage == Stage::GPhi ? build_G_phi(phi) : build_G_phi_prime(phi);
    json doc = to_json(red);
    doc["formula"] = {{"qdimacs", to_qdimacs(phi)}, {"value", qbf_eval(phi)}};
    if (a.dot)
      emit(to_dot(red.graph, to_string(stage)), a.out);
    else
      emit(doc.dump(2), a.out);
    return 0;
  }
  std::string path = a.graph.empty() ? a.input : a.graph;
  if (path.empty()) throw InvalidInput(stage_name + " needs --graph");
  if (a.v1.empty() || a.v2.empty()) throw InvalidInput(stage_name + " needs --v1 and --v2");
  Graph g = load_graph(path).graph;
  Vertex v1 = resolve_vertex(g, a.v1);
  Vertex v2 = resolve_vertex(g, a.v2);
  if (stage == Stage::H)
    red = build_H(g, v1, v2);
  else if (stage == Stage::HPrime)
    red = build_H_prime(g, v1, v2);
  else
    red = build_F(g, v1, v2);
  if (a.dot)
    emit(to_dot(red.graph, to_string(stage)), a.out);
  else
    emit(to_json(red).dump(2), a.out);
  return 0;
}

struct VerifyArgs {
  SuiteOptions options;
  std::optional<std::uint64_t> budget;
  bool no_budget = false;
  std::string dump;
  std::string out;
};

std::optional<std::uint64_t> default_suite_budget(const std::string& suite) {
  static const std::map<std::string, std::uint64_t> defaults{
      {"trees", 10'000'000},  {"lemmas", 10'000'000},           {"double-tree", 10'000'000},
      {"connectivity", 0},    {"qbf-equivalence", 100'000'000}, {"h-properties", 100'000'000}};
  auto it = defaults.find(suite);
  if (it == defaults.end() || it->second == 0) return std::nullopt;
  return it->second;
}

int run_verify(const std::string& suite, VerifyArgs a) {
  a.options.node_budget = a.budget ? a.budget : env_budget();
  if (!a.options.node_budget) a.options.node_budget = default_suite_budget(suite);
  if (a.no_budget) a.options.node_budget.reset();
  SuiteReport report = run_suite(suite, a.options);
  json doc = report.to_json();
  doc["seed"] = a.options.seed;
  if (a.options.node_budget)
    doc["node_budget"] = *a.options.node_budget;
  else
    doc["node_budget"] = nullptr;
  if (!report.passed()) {
    std::string dump = a.dump.empty() ? "tron-counterexamples-" + suite + ".json" : a.dump;
    json ce = json::array();
    for (const auto& f : report.failures) ce.push_back({{"description", f.description}, {"counterexample", f.counterexample}});
    emit(ce.dump(2), dump);
    doc["counterexample_file"] = dump;
  }
  emit(doc.dump(2), a.out);
  if (!report.passed()) return kExitFail;
  if (report.budget_exhausted > 0) return kExitBudget;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver, constructions and reductions for two-player Tron on graphs"};
  app.require_subcommand(1);

  GenArgs gen;
  std::string gen_which;
  auto* g = app.add_subcommand("gen", "Emit a construction as graph JSON or DOT");
  g->set_help_flag("--help", "Print this help message and exit");
  g->add_option("construction", gen_which,
                "two-paths | path | cycle | complete | visage | planar-visage | double-tree | k-visage | super")
      ->required();
  g->add_option("-o,--out", gen.out, "Output file (stdout when omitted)");
  g->add_flag("--dot", gen.dot, "Emit DOT instead of JSON");
  g->add_option("--m", gen.m, "Vertices per path (two-paths)");
  g->add_option("--n", gen.n, "Vertex count (path, cycle, complete)");
  g->add_option("--l", gen.l, "Visage scale; the cycle has 4l vertices");
  g->add_option("--overhead-m", gen.overhead_m, "Path length of the two-paths overhead");
  g->add_option("--variant", gen.variant, "Planar visage owner: bob | alice");
  g->add_option("--length", gen.length, "Planar visage path length");
  g->add_option("--spacing", gen.spacing, "Planar visage attachment spacing");
  g->add_option("--d", gen.d, "Double-tree degree");
  g->add_option("--h", gen.h, "Double-tree height");
  g->add_option("--k", gen.k, "k-connected visage degree");
  g->add_option("--tree-h", gen.tree_h, "k-connected visage tree height (0: minimal)");
  g->add_option("--overhead-len", gen.overhead_len, "k-connected visage overhead path length");
  g->add_option("--graph", gen.graph, "Input graph (super)");

  SolveArgs solve_args;
  auto* s = app.add_subcommand("solve", "Solve a game exactly");
  s->add_option("graph", solve_args.file, "Graph or reduction JSON")->required();
  s->add_option("--given", solve_args.given, "Given starts: Alice Bob (index or label)")->expected(2);
  s->add_option("--handicap", solve_args.handicap, "Alice moves before Bob places");
  s->add_option("--whitelist", solve_args.whitelist, "Admissible Bob starts")->delimiter(',');
  s->add_option("--objective", solve_args.objective, "ratio | classification");
  s->add_option("--budget", solve_args.budget, "Expanded-node cap (default: TRON_NODE_BUDGET)");
  s->add_flag("--no-budget", solve_args.no_budget, "Ignore TRON_NODE_BUDGET");
  s->add_option("--vs-policy", solve_args.policy, "visage-bob | planar-visage-alice");
  s->add_flag("--linear", solve_args.linear, "Linear-space search without memoization");

  ReduceArgs red;
  std::string stage;
  auto* r = app.add_subcommand("reduce", "Compile a reduction stage");
  r->add_option("stage", stage, "g-phi | g-phi-prime | h | h-prime | f")->required();
  r->add_option("input", red.input, "QDIMACS formula (g-phi, g-phi-prime)");
  r->add_option("--graph", red.graph, "Input graph (h, h-prime, f)");
  r->add_option("--v1", red.v1, "Alice's start in the input graph");
  r->add_option("--v2", red.v2, "Bob's start in the input graph");
  r->add_option("-o,--out", red.out, "Output file (stdout when omitted)");
  r->add_flag("--dot", red.dot, "Emit DOT instead of JSON");

  VerifyArgs ver;
  std::string suite;
  auto* v = app.add_subcommand("verify", "Run a verification suite");
  v->add_option("suite", suite, "trees | lemmas | double-tree | connectivity | qbf-equivalence | h-properties")
      ->required();
  v->add_option("--max-n", ver.options.max_n, "Largest enumerated graph (0: suite default)");
  v->add_option("--n", ver.options.variables, "Largest variable count (qbf-equivalence)");
  v->add_option("--k", ver.options.clauses, "Largest clause count (qbf-equivalence)");
  v->add_option("--samples", ver.options.samples, "Sample cap (0: all enumerated formulas)");
  v->add_flag("--undirected", ver.options.undirected, "Use the undirected QBF builder");
  v->add_option("--seed", ver.options.seed, "Sampling seed");
  v->add_option("--budget", ver.budget, "Per-solve node cap (default: TRON_NODE_BUDGET or suite default)");
  v->add_flag("--no-budget", ver.no_budget, "Solve without a node cap");
  v->add_option("--dump", ver.dump, "Counterexample file");
  v->add_option("-o,--out", ver.out, "Report file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*g) return run_gen(gen_which, gen);
    if (*s) return run_solve(solve_args);
    if (*r) return run_reduce(stage, red);
    if (*v) return run_verify(suite, ver);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitInput;
}
