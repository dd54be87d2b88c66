#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tron {

struct Literal {
  std::uint32_t var = 1;  ///< 1-based
  bool negated = false;

  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::vector<Literal>;

/// Strictly alternating prefix: odd variables existential, even universal.
struct Qbf {
  std::uint32_t variables = 0;
  std::vector<Clause> clauses;

  bool existential(std::uint32_t var) const { return var % 2 == 1; }
};

/// Throws InvalidInput on an empty matrix, arity != 3 or undeclared variables.
void validate(const Qbf& phi);

/// Brute-force evaluation over the quantifier tree.
bool qbf_eval(const Qbf& phi);

/// QDIMACS subset: "p cnf N K", alternating quantifier lines starting with
/// 'e', then K clauses of three literals terminated by 0. Errors carry the
/// 1-based line number.
Qbf parse_qdimacs(std::string_view text);

std::string to_qdimacs(const Qbf& phi);
std::string to_string(const Qbf& phi);

}  // namespace tron
