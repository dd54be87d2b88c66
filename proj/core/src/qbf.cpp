#include "tron/qbf.hpp"

#include <sstream>

#include "tron/graph.hpp"

namespace tron {

void validate(const Qbf& phi) {
  if (phi.variables == 0) throw InvalidInput("qbf: no variables");
  if (phi.clauses.empty()) throw InvalidInput("qbf: no clauses");
  for (std::size_t c = 0; c < phi.clauses.size(); ++c) {
    if (phi.clauses[c].size() != 3)
      throw InvalidInput("qbf: clause " + std::to_string(c + 1) + " has " + std::to_string(phi.clauses[c].size()) +
                         " literals, expected 3");
    for (const auto& lit : phi.clauses[c])
      if (lit.var == 0 || lit.var > phi.variables)
        throw InvalidInput("qbf: clause " + std::to_string(c + 1) + " uses undeclared variable " +
                           std::to_string(lit.var));
  }
}

namespace {

bool eval_from(const Qbf& phi, std::vector<bool>& value, std::uint32_t var) {
  if (var > phi.variables) {
    for (const auto& clause : phi.clauses) {
      bool sat = false;
      for (const auto& lit : clause) sat = sat || (value[lit.var] != lit.negated);
      if (!sat) return false;
    }
    return true;
  }
  bool any = false;
  bool all = true;
  for (bool b : {true, false}) {
    value[var] = b;
    bool r = eval_from(phi, value, var + 1);
    any = any || r;
    all = all && r;
  }
  return phi.existential(var) ? any : all;
}

}  // namespace

bool qbf_eval(const Qbf& phi) {
  validate(phi);
  std::vector<bool> value(phi.variables + 1, false);
  return eval_from(phi, value, 1);
}

Qbf parse_qdimacs(std::string_view text) {
  Qbf phi;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  std::size_t expected_clauses = 0;
  std::uint32_t declared = 0;
  bool clauses_started = false;
  auto fail = [&](const std::string& msg) { throw InvalidInput("qdimacs line " + std::to_string(lineno) + ": " + msg); };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head) || head == "c") continue;
    if (head == "p") {
      std::string fmt;
      long long nv = -1;
      long long nc = -1;
      if (header) fail("duplicate problem line");
      if (!(ls >> fmt >> nv >> nc) || fmt != "cnf" || nv <= 0 || nc <= 0) fail("malformed problem line");
      header = true;
      phi.variables = static_cast<std::uint32_t>(nv);
      expected_clauses = static_cast<std::size_t>(nc);
      continue;
    }
    if (!header) fail("expected 'p cnf' problem line");
    if (head == "e" || head == "a") {
      if (clauses_started) fail("quantifier line after clauses");
      long long v = 0;
      bool any = false;
      while (ls >> v && v != 0) {
        bool want_e = (declared + 1) % 2 == 1;
        if ((head == "e") != want_e)
          fail(declared == 0 ? "prefix must start with 'e'" : "quantifiers must alternate e/a with one variable each");
        if (v != static_cast<long long>(declared) + 1) fail("variables must be quantified in order 1..n");
        ++declared;
        any = true;
      }
      if (v != 0) fail("quantifier line must end with 0");
      if (!any) fail("empty quantifier line");
      continue;
    }
    clauses_started = true;
    std::istringstream cs(line);
    Clause clause;
    long long lit = 0;
    bool terminated = false;
    while (cs >> lit) {
      if (lit == 0) {
        terminated = true;
        break;
      }
      auto var = static_cast<std::uint32_t>(lit < 0 ? -lit : lit);
      if (var > declared) fail("undeclared variable " + std::to_string(var));
      clause.push_back({var, lit < 0});
    }
    if (cs.fail() && !cs.eof()) fail("unreadable literal");
    if (!terminated) fail("clause must end with 0");
    if (clause.size() != 3) fail("clause has " + std::to_string(clause.size()) + " literals, expected 3");
    phi.clauses.push_back(std::move(clause));
  }
  if (!header) throw InvalidInput("qdimacs: missing problem line");
  if (declared != phi.variables) throw InvalidInput("qdimacs: problem line declares " + std::to_string(phi.variables) +
                                                    " variables but " + std::to_string(declared) + " are quantified");
  if (phi.clauses.size() != expected_clauses)
    throw InvalidInput("qdimacs: expected " + std::to_string(expected_clauses) + " clauses, found " +
                       std::to_string(phi.clauses.size()));
  validate(phi);
  return phi;
}

std::string to_qdimacs(const Qbf& phi) {
  std::ostringstream out;
  out << "p cnf " << phi.variables << ' ' << phi.clauses.size() << '\n';
  for (std::uint32_t v = 1; v <= phi.variables; ++v) out << (phi.existential(v) ? "e " : "a ") << v << " 0\n";
  for (const auto& c : phi.clauses) {
    for (const auto& lit : c) out << (lit.negated ? "-" : "") << lit.var << ' ';
    out << "0\n";
  }
  return out.str();
}

std::string to_string(const Qbf& phi) {
  std::ostringstream out;
  for (std::uint32_t v = 1; v <= phi.variables; ++v) out << (phi.existential(v) ? "E" : "A") << 'x' << v << ' ';
  out << ':';
  for (std::size_t i = 0; i < phi.clauses.size(); ++i) {
    out << (i ? " & (" : " (");
    for (std::size_t j = 0; j < phi.clauses[i].size(); ++j) {
      const auto& lit = phi.clauses[i][j];
      out << (j ? " | " : "") << (lit.negated ? "~" : "") << 'x' << lit.var;
    }
    out << ')';
  }
  return out.str();
}

}  // namespace tron
