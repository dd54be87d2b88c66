#include "tron/reductions.hpp"

#include <algorithm>
#include <set>

#include "tron/graph_io.hpp"

namespace tron {

std::string to_string(Stage s) {
  switch (s) {
    case Stage::GPhi: return "G_phi";
    case Stage::GPhiPrime: return "G_phi_prime";
    case Stage::H: return "H";
    case Stage::HPrime: return "H_prime";
    case Stage::F: return "F";
  }
  return "?";
}

Stage stage_from_string(const std::string& s) {
  for (Stage st : {Stage::GPhi, Stage::GPhiPrime, Stage::H, Stage::HPrime, Stage::F})
    if (to_string(st) == s) return st;
  throw InvalidInput("unknown reduction stage '" + s + "'");
}

GameRules ReductionOutput::rules(Objective objective) const {
  if (alice_start && bob_start) return GameRules::given_start(*alice_start, *bob_start, objective);
  return GameRules::free_start(objective);
}

nlohmann::json to_json(const ReductionOutput& r) {
  nlohmann::json j;
  j["provenance"] = {{"stage", to_string(r.stage)}};
  j["graph"] = to_json(r.graph);
  j["landmarks"] = nlohmann::json::object();
  for (const auto& [name, v] : r.graph.labels()) j["landmarks"][name] = v;
  j["groups"] = r.groups;
  j["calibration"] = r.calibration;
  if (r.alice_start) j["alice_start"] = *r.alice_start;
  if (r.bob_start) j["bob_start"] = *r.bob_start;
  return j;
}

ReductionOutput reduction_from_json(const nlohmann::json& j) {
  try {
    ReductionOutput r;
    r.stage = stage_from_string(j.at("provenance").at("stage").get<std::string>());
    r.graph = graph_from_json(j.at("graph"));
    if (j.contains("groups")) r.groups = j.at("groups").get<std::map<std::string, std::vector<Vertex>>>();
    if (j.contains("calibration")) r.calibration = j.at("calibration");
    if (j.contains("alice_start")) r.alice_start = j.at("alice_start").get<Vertex>();
    if (j.contains("bob_start")) r.bob_start = j.at("bob_start").get<Vertex>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("reduction json: ") + e.what());
  }
}

namespace {

std::string var_name(std::uint32_t i) { return "x" + std::to_string(i); }

struct Chains {
  Vertex alice_end;
  Vertex bob_end;
  std::vector<Vertex> t;  // index by variable
  std::vector<Vertex> f;
};

// Alice's chain holds the diamonds of odd variables, Bob's those of even
// ones; opposite every diamond sits a relay of one vertex so both chains
// advance two moves per variable.
Chains build_chains(GraphBuilder& b, const Qbf& phi, ReductionOutput& out) {
  Chains c;
  c.t.assign(phi.variables + 1, 0);
  c.f.assign(phi.variables + 1, 0);
  Vertex ja = b.add_vertex("alice_start");
  Vertex jb = b.add_vertex("bob_start");
  b.set_label("v1", ja);
  b.set_label("v2", jb);
  out.alice_start = ja;
  out.bob_start = jb;
  for (std::uint32_t i = 1; i <= phi.variables; ++i) {
    bool alice_side = phi.existential(i);
    Vertex& diamond_in = alice_side ? ja : jb;
    Vertex& relay_in = alice_side ? jb : ja;
    Vertex t = b.add_vertex("T_" + var_name(i));
    Vertex f = b.add_vertex("F_" + var_name(i));
    Vertex dout = b.add_vertex(std::string(alice_side ? "J_A_" : "J_B_") + std::to_string(i));
    b.add_edge(diamond_in, t);
    b.add_edge(diamond_in, f);
    b.add_edge(t, dout);
    b.add_edge(f, dout);
    Vertex r = b.add_vertex(std::string(alice_side ? "relay_B_" : "relay_A_") + std::to_string(i));
    Vertex rout = b.add_vertex(std::string(alice_side ? "J_B_" : "J_A_") + std::to_string(i));
    b.add_edge(relay_in, r);
    b.add_edge(r, rout);
    diamond_in = dout;
    relay_in = rout;
    c.t[i] = t;
    c.f[i] = f;
    out.groups["branch"].push_back(t);
    out.groups["branch"].push_back(f);
  }
  c.alice_end = ja;
  c.bob_end = jb;
  return c;
}

// Repeats clauses cyclically until there are at least `min_clauses`; the
// formula's truth value is unchanged.
Qbf padded(const Qbf& phi, std::size_t min_clauses, std::size_t& added) {
  validate(phi);
  Qbf p = phi;
  added = 0;
  for (std::size_t i = 0; p.clauses.size() < min_clauses; ++i, ++added) p.clauses.push_back(phi.clauses[i % phi.clauses.size()]);
  return p;
}

// Complement branch vertices of a clause, deduplicated, in literal order.
std::vector<Vertex> complements(const Clause& clause, const Chains& c) {
  std::vector<Vertex> out;
  for (const auto& lit : clause) {
    Vertex v = lit.negated ? c.t[lit.var] : c.f[lit.var];
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

std::vector<Vertex> add_clauses(GraphBuilder& b, std::size_t k, ReductionOutput& out) {
  std::vector<Vertex> clauses;
  for (std::size_t j = 0; j < k; ++j) clauses.push_back(b.add_vertex("C_" + std::to_string(j + 1)));
  out.groups["clauses"] = clauses;
  return clauses;
}

}  // namespace

ReductionOutput build_G_phi(const Qbf& input) {
  std::size_t padding = 0;
  Qbf phi = padded(input, kMinClausesDirected, padding);
  const std::size_t k = phi.clauses.size();
  ReductionOutput out;
  out.stage = Stage::GPhi;
  GraphBuilder b(true);
  Chains c = build_chains(b, phi, out);
  Vertex last = c.alice_end;
  for (std::size_t i = 1; i < k; ++i) {
    Vertex q = b.add_vertex(i == 1 ? std::string("queue_entry") : "queue_" + std::to_string(i));
    b.add_edge(last, q);
    out.groups["queue"].push_back(q);
    last = q;
  }
  auto clauses = add_clauses(b, k, out);
  Vertex dummy = b.add_vertex("dummy");
  for (std::size_t j = 0; j < k; ++j) {
    b.add_edge(last, clauses[j]);
    b.add_edge(c.bob_end, clauses[j]);
    b.add_edge(clauses[j], clauses[(j + 1) % k]);
    for (Vertex v : complements(phi.clauses[j], c)) b.add_edge(clauses[j], v);
    b.add_edge(clauses[j], dummy);
  }
  out.graph = b.build();
  out.calibration = {{"variables", phi.variables},
                     {"clauses", k},
                     {"clause_padding", padding},
                     {"queue_length", k - 1},
                     {"vertex_formula", "2 + 5n + (k-1) + k + 1"}};
  return out;
}

GPhiPrimeCalibration GPhiPrimeCalibration::defaults(std::size_t n, std::size_t k) {
  GPhiPrimeCalibration c;
  c.slow_path = 2 * k + n;
  c.queue_stem = 2;
  c.queue_branch = k > 3 ? k - 3 : 1;
  // Alice needs stem + branch + 1 moves from her last junction to a clause and
  // must arrive one ply after Bob's (k-1)-th clause.
  std::size_t need = c.queue_stem + c.queue_branch + 2;
  c.bob_delay = need > k ? need - k : 1;
  c.dummy_path = 2 * k + n;
  c.spare_path = 2 * n + k;
  return c;
}

nlohmann::json GPhiPrimeCalibration::to_json() const {
  return {{"slow_path", slow_path}, {"queue_stem", queue_stem}, {"queue_branch", queue_branch},
          {"bob_delay", bob_delay}, {"dummy_path", dummy_path}, {"spare_path", spare_path},
          {"clause_padding", clause_padding}};
}

ReductionOutput build_G_phi_prime(const Qbf& phi) {
  std::size_t padding = 0;
  Qbf p = padded(phi, kMinClausesUndirected, padding);
  return build_G_phi_prime(phi, GPhiPrimeCalibration::defaults(p.variables, p.clauses.size()));
}

ReductionOutput build_G_phi_prime(const Qbf& input, const GPhiPrimeCalibration& calibration) {
  GPhiPrimeCalibration cal = calibration;
  Qbf phi = padded(input, kMinClausesUndirected, cal.clause_padding);
  if (cal.queue_stem < 1 || cal.queue_branch < 1 || cal.bob_delay < 1 || cal.slow_path < 1 || cal.dummy_path < 1)
    throw InvalidInput("build_G_phi_prime: calibration lengths must be positive");
  const std::size_t k = phi.clauses.size();
  ReductionOutput out;
  out.stage = Stage::GPhiPrime;
  GraphBuilder b(false);
  Chains c = build_chains(b, phi, out);

  Vertex stem = c.alice_end;
  for (std::size_t i = 0; i < cal.queue_stem; ++i) {
    Vertex q = b.add_vertex(i == 0 ? std::string("queue_entry") : "queue_stem_" + std::to_string(i + 1));
    b.add_edge(stem, q);
    out.groups["queue"].push_back(q);
    stem = q;
  }
  Vertex hub = c.bob_end;
  for (std::size_t i = 1; i < cal.bob_delay; ++i) {
    Vertex h = b.add_vertex();
    b.add_edge(hub, h);
    hub = h;
  }
  if (hub != c.bob_end) b.set_label("bob_hub", hub);

  auto clauses = add_clauses(b, k, out);
  for (std::size_t j = 0; j < k; ++j) {
    Vertex prev = stem;
    for (std::size_t i = 0; i < cal.queue_branch; ++i) {
      Vertex q = b.add_vertex();
      b.add_edge(prev, q);
      out.groups["queue"].push_back(q);
      prev = q;
    }
    b.add_edge(prev, clauses[j]);
    b.add_edge(hub, clauses[j]);
  }
  if (k == 2) {
    b.add_edge(clauses[0], clauses[1]);
  } else {
    for (std::size_t j = 0; j < k; ++j) b.add_edge(clauses[j], clauses[(j + 1) % k]);
  }
  Vertex dummy = b.add_vertex("dummy");
  for (std::size_t j = 0; j < k; ++j) {
    for (Vertex v : complements(phi.clauses[j], c)) b.add_path(clauses[j], v, cal.slow_path);
    b.add_path(clauses[j], dummy, cal.dummy_path);
  }
  std::vector<Vertex> spare_hosts = out.groups["branch"];
  spare_hosts.push_back(dummy);
  for (Vertex v : spare_hosts) b.add_tail(v, cal.spare_path);
  out.graph = b.build();
  out.calibration = cal.to_json();
  out.calibration["variables"] = phi.variables;
  out.calibration["clauses"] = k;
  return out;
}

// ---------------------------------------------------------------------------
// Overhead constructions

namespace {

struct OverheadLengths {
  std::size_t n_eff;
  std::size_t attach;   // u_i to v_i, edges
  std::size_t l_low;
  std::size_t l_up;
  std::size_t aux;      // auxiliary path, edges
  std::size_t s2_index; // position of s2's attachment on each auxiliary path
};

void check_starts(const Graph& g, Vertex v1, Vertex v2, const char* who) {
  if (v1 >= g.vertex_count() || v2 >= g.vertex_count())
    throw InvalidInput(std::string(who) + ": start vertex out of range");
  if (v1 == v2) throw InvalidInput(std::string(who) + ": v1 and v2 must differ");
}

ReductionOutput build_overhead(const Graph& g, Vertex v1, Vertex v2, const OverheadLengths& len, Stage stage) {
  ReductionOutput out;
  out.stage = stage;
  GraphBuilder b(g.directed());
  Vertex off = b.embed(g, "g/");
  b.set_label("v1", off + v1);
  b.set_label("v2", off + v2);
  Vertex u1 = b.add_vertex("u1");
  Vertex u2 = b.add_vertex("u2");
  b.add_path(u1, off + v1, len.attach);
  b.add_path(u2, off + v2, len.attach);
  Vertex s1 = b.add_vertex("s1");
  Vertex s2 = b.add_vertex("s2");
  b.add_edge(s1, u1);
  b.add_edge(s2, u2);
  for (const char* name : {"a", "b"}) {
    Vertex first = b.add_vertices(len.aux + 1);
    for (std::size_t i = 0; i < len.aux; ++i) b.add_edge(first + i, first + i + 1);
    b.set_label(std::string("aux_") + name + "_top", first);
    b.set_label(std::string("aux_") + name + "_bottom", first + static_cast<Vertex>(len.aux));
    b.set_label(std::string("aux_") + name + "_s2", first + static_cast<Vertex>(len.s2_index));
    b.add_edge(s1, first);
    b.add_edge(s2, first + static_cast<Vertex>(len.s2_index));
    out.groups["aux_" + std::string(name)].resize(len.aux + 1);
    for (std::size_t i = 0; i <= len.aux; ++i) out.groups["aux_" + std::string(name)][i] = first + static_cast<Vertex>(i);
  }
  out.graph = b.build();
  out.calibration = {{"n", g.vertex_count()},        {"n_eff", len.n_eff},       {"attach_path", len.attach},
                     {"l_low", len.l_low},           {"l_up", len.l_up},         {"aux_path", len.aux},
                     {"s2_attach_index", len.s2_index}, {"s2_below", len.aux - len.s2_index}};
  return out;
}

}  // namespace

ReductionOutput build_H(const Graph& g, Vertex v1, Vertex v2) {
  if (!g.directed()) throw InvalidInput("build_H: graph must be directed");
  check_starts(g, v1, v2, "build_H");
  OverheadLengths len{};
  len.n_eff = std::max<std::size_t>(g.vertex_count(), 4);
  len.attach = 2 * len.n_eff;
  len.l_low = 2 * len.n_eff;
  len.l_up = 3 * len.n_eff;
  len.aux = len.l_up + 1;
  // Part below s2 is l_low - 1 edges, the part above it l_up - l_low + 2.
  len.s2_index = len.aux - (len.l_low - 1);
  return build_overhead(g, v1, v2, len, Stage::H);
}

ReductionOutput build_H_prime(const Graph& g, Vertex v1, Vertex v2) {
  if (g.directed()) throw InvalidInput("build_H_prime: graph must be undirected");
  check_starts(g, v1, v2, "build_H_prime");
  OverheadLengths len{};
  len.n_eff = g.vertex_count();
  len.attach = 2 * len.n_eff;
  len.l_low = 4 * len.n_eff;
  len.l_up = 5 * len.n_eff;
  len.aux = len.l_up + 1;
  len.s2_index = len.n_eff + 2;
  return build_overhead(g, v1, v2, len, Stage::HPrime);
}

ReductionOutput build_F(const Graph& g, Vertex v1, Vertex v2) {
  ReductionOutput hp = build_H_prime(g, v1, v2);
  ReductionOutput out;
  out.stage = Stage::F;
  GraphBuilder b(false);
  Vertex oa = b.embed(hp.graph, "a/");
  Vertex ob = b.embed(hp.graph, "b/");
  Vertex t1 = b.add_vertex("t1");
  Vertex t2 = b.add_vertex("t2");
  Vertex s1a = oa + hp.graph.at("s1");
  Vertex s2a = oa + hp.graph.at("s2");
  Vertex s1b = ob + hp.graph.at("s1");
  Vertex s2b = ob + hp.graph.at("s2");
  const Edge connectors[] = {{t1, s1a}, {t1, s1b}, {t1, s2a}, {t1, s2b}, {t2, s2a},
                             {t2, s2b}, {s1a, s2a}, {s1b, s2b}, {s1a, s1b}, {s2a, s2b}};
  for (auto [u, v] : connectors) b.add_edge(u, v);
  out.graph = b.build();
  out.groups["dot"] = {t2, s2a, s2b};
  out.groups["box"] = {t1, s1a, s1b};
  out.calibration = {{"h_prime", hp.calibration}, {"connector_edges", std::size(connectors)}};
  return out;
}

// ---------------------------------------------------------------------------
// H' properties

namespace {

PropertyResult p1_check(const ReductionOutput& h, const SolveOptions& options) {
  PropertyResult r{"p1", LemmaStatus::Holds, ""};
  const Graph& g = h.graph;
  // Optimal here means win-preserving: the moves are judged by who wins.
  GameRules rules = GameRules::given_start(g.at("s1"), g.at("s2"), Objective::Classification);
  GameState s0 = initial_state(g, rules);
  auto rank = [](Classification c) { return static_cast<int>(c); };
  auto best_for = [&](const GameState& s, Vertex wanted, bool minimize) -> std::optional<bool> {
    std::optional<int> wanted_value;
    std::optional<int> best;
    for (Move m : legal_moves(g, rules, s)) {
      SolveResult res = solve_from(g, rules, apply_move(g, rules, s, m), options);
      if (res.budget_exhausted) return std::nullopt;
      int v = rank(res.classification());
      if (!m.is_pass() && m.vertex() == wanted) wanted_value = v;
      if (!best || (minimize ? v < *best : v > *best)) best = v;
    }
    return wanted_value && *wanted_value == *best;
  };
  auto alice = best_for(s0, g.at("u1"), true);
  if (!alice) return {"p1", LemmaStatus::BudgetExhausted, "budget exhausted on Alice's first move"};
  if (!*alice) return {"p1", LemmaStatus::Violated, "u1 is not an optimal first move for Alice"};
  GameState s1 = apply_move(g, rules, s0, Move::to(g.at("u1")));
  auto bob = best_for(s1, g.at("u2"), false);
  if (!bob) return {"p1", LemmaStatus::BudgetExhausted, "budget exhausted on Bob's reply"};
  if (!*bob) return {"p1", LemmaStatus::Violated, "u2 is not an optimal reply for Bob"};
  return r;
}

PropertyResult p2_check(const ReductionOutput& h, const SolveOptions& options) {
  const Graph& g = h.graph;
  SolveResult res = solve(g, GameRules::given_start(g.at("s2"), g.at("s1"), Objective::Classification), options);
  if (res.budget_exhausted) return {"p2", LemmaStatus::BudgetExhausted, "budget exhausted"};
  std::string detail = "alpha=" + std::to_string(res.outcome.alpha) + " beta=" + std::to_string(res.outcome.beta);
  return {"p2", res.classification() == Classification::BobWins ? LemmaStatus::Holds : LemmaStatus::Violated, detail};
}

PropertyResult p3_check(const ReductionOutput& h) {
  const Graph& g = h.graph;
  Vertex s1 = g.at("s1");
  VertexSet forbidden(g.vertex_count());
  forbidden.insert(s1);
  forbidden.insert(g.at("s2"));
  std::size_t from_s1 = longest_path_length(g, s1, forbidden).length;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (v == s1) continue;
    std::size_t len = longest_path_length(g, v, forbidden).length;
    if (len >= from_s1)
      return {"p3", LemmaStatus::Violated,
              "start " + std::to_string(v) + " reaches " + std::to_string(len) + " >= " + std::to_string(from_s1)};
  }
  return {"p3", LemmaStatus::Holds, "longest path from s1 has " + std::to_string(from_s1) + " edges"};
}

PropertyResult p4_check(const ReductionOutput& h, std::uint64_t path_cap) {
  const Graph& g = h.graph;
  Vertex s1 = g.at("s1");
  Vertex s2 = g.at("s2");
  const std::vector<Vertex> exits{g.at("aux_a_s2"), g.at("aux_b_s2")};
  VertexSet on_path(g.vertex_count());
  std::uint64_t paths = 0;
  bool violated = false;
  bool capped = false;
  std::function<void(Vertex)> dfs = [&](Vertex v) {
    if (violated || capped) return;
    if (v == s2) {
      if (++paths > path_cap) {
        capped = true;
        return;
      }
      bool extendable = std::any_of(exits.begin(), exits.end(), [&](Vertex w) { return !on_path.contains(w); });
      if (!extendable) violated = true;
      return;
    }
    for (Vertex w : g.neighbors(v)) {
      if (on_path.contains(w)) continue;
      on_path.insert(w);
      dfs(w);
      on_path.erase(w);
    }
  };
  on_path.insert(s1);
  dfs(s1);
  if (violated) return {"p4", LemmaStatus::Violated, "an s1-s2 path uses both auxiliary exits of s2"};
  if (capped) return {"p4", LemmaStatus::BudgetExhausted, "more than " + std::to_string(path_cap) + " paths"};
  return {"p4", LemmaStatus::Holds, std::to_string(paths) + " paths checked"};
}

PropertyResult p5_check(const ReductionOutput& h) {
  const Graph& g = h.graph;
  std::size_t d = bfs_distances(g, g.at("s1"))[g.at("s2")];
  return {"p5", d >= 3 && d != kUnreachable ? LemmaStatus::Holds : LemmaStatus::Violated,
          "dist(s1,s2)=" + (d == kUnreachable ? std::string("inf") : std::to_string(d))};
}

}  // namespace

std::vector<PropertyResult> check_h_prime_properties(const ReductionOutput& h, const SolveOptions& options) {
  if (h.stage != Stage::HPrime) throw InvalidInput("check_h_prime_properties: expected an H_prime output");
  return {p1_check(h, options), p2_check(h, options), p3_check(h), p4_check(h, options.node_budget.value_or(10'000'000)),
          p5_check(h)};
}

}  // namespace tron
