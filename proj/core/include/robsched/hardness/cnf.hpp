#pragma once

#include <array>
#include <iosfwd>
#include <vector>

namespace robsched::hardness {

struct Literal {
  int variable = 0;  // 0-based
  bool positive = true;
};

/// 3-CNF formula: every clause has exactly three literals (repeats allowed).
struct CnfFormula {
  int variable_count = 0;
  std::vector<std::array<Literal, 3>> clauses;
};

bool satisfies(const CnfFormula& formula, const std::vector<bool>& assignment);

/// Reads DIMACS CNF ("p cnf <vars> <clauses>", clauses terminated by 0,
/// "c" comment lines). Clauses with other than three literals are rejected.
CnfFormula parse_dimacs(std::istream& in);

std::string to_dimacs(const CnfFormula& formula);

}  // namespace robsched::hardness
