#include "robsched/hardness/cnf.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

namespace robsched::hardness {

bool satisfies(const CnfFormula& formula, const std::vector<bool>& assignment) {
  if (static_cast<int>(assignment.size()) != formula.variable_count)
    throw std::invalid_argument("assignment length does not match variable count");
  for (const auto& clause : formula.clauses) {
    bool sat = false;
    for (const Literal& lit : clause) {
      if (assignment[lit.variable] == lit.positive) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

CnfFormula parse_dimacs(std::istream& in) {
  CnfFormula formula;
  int declared_clauses = -1;
  bool header_seen = false;
  std::vector<Literal> pending;

  std::string line;
  while (std::getline(in, line)) {
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first)) continue;  // blank line
    if (first == "c") continue;        // comment
    if (first == "p") {
      std::string format;
      if (header_seen || !(tokens >> format >> formula.variable_count >> declared_clauses) ||
          format != "cnf" || formula.variable_count < 1 || declared_clauses < 0)
        throw std::invalid_argument("malformed DIMACS header");
      header_seen = true;
      continue;
    }
    if (!header_seen) throw std::invalid_argument("clause before DIMACS header");
    tokens.clear();
    tokens.str(line);
    long long lit;
    while (tokens >> lit) {
      if (lit == 0) {
        if (pending.size() != 3)
          throw std::invalid_argument("only 3-literal clauses are supported, got " +
                                      std::to_string(pending.size()));
        formula.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
        continue;
      }
      long long var = lit > 0 ? lit : -lit;
      if (var > formula.variable_count)
        throw std::invalid_argument("literal " + std::to_string(lit) + " out of range");
      pending.push_back({static_cast<int>(var - 1), lit > 0});
    }
    if (tokens.fail() && !tokens.eof()) throw std::invalid_argument("bad literal in: " + line);
  }
  if (!header_seen) throw std::invalid_argument("missing DIMACS header");
  if (!pending.empty()) throw std::invalid_argument("unterminated clause at end of input");
  if (declared_clauses != static_cast<int>(formula.clauses.size()))
    throw std::invalid_argument("header declares " + std::to_string(declared_clauses) +
                                " clauses, found " + std::to_string(formula.clauses.size()));
  return formula;
}

std::string to_dimacs(const CnfFormula& formula) {
  std::ostringstream out;
  out << "p cnf " << formula.variable_count << ' ' << formula.clauses.size() << '\n';
  for (const auto& clause : formula.clauses) {
    for (const Literal& lit : clause)
      out << (lit.positive ? lit.variable + 1 : -(lit.variable + 1)) << ' ';
    out << "0\n";
  }
  return out.str();
}

}  // namespace robsched::hardness
