#include "robsched/hardness/sat.hpp"

#include "robsched/errors.hpp"

#include <stdexcept>
#include <string>

namespace robsched::hardness {

namespace {

enum : signed char { kUnset = -1, kFalse = 0, kTrue = 1 };

struct Dpll {
  const CnfFormula& formula;
  std::vector<signed char> assignment;

  explicit Dpll(const CnfFormula& f) : formula(f), assignment(f.variable_count, kUnset) {}

  // Applies unit propagation. Returns false on a conflict; `touched` records
  // assignments made so the caller can roll back.
  bool propagate(std::vector<int>& touched) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& clause : formula.clauses) {
        int unassigned = -1;
        bool satisfied = false;
        int unassigned_count = 0;
        for (const Literal& lit : clause) {
          signed char v = assignment[lit.variable];
          if (v == kUnset) {
            ++unassigned_count;
            unassigned = lit.positive ? lit.variable + 1 : -(lit.variable + 1);
          } else if ((v == kTrue) == lit.positive) {
            satisfied = true;
            break;
          }
        }
        if (satisfied) continue;
        if (unassigned_count == 0) return false;  // conflict
        if (unassigned_count == 1) {
          int var = unassigned > 0 ? unassigned - 1 : -unassigned - 1;
          assignment[var] = unassigned > 0 ? kTrue : kFalse;
          touched.push_back(var);
          changed = true;
        }
      }
    }
    return true;
  }

  bool solve() {
    std::vector<int> touched;
    if (!propagate(touched)) {
      for (int var : touched) assignment[var] = kUnset;
      return false;
    }
    int branch = -1;
    for (int var = 0; var < formula.variable_count; ++var) {
      if (assignment[var] == kUnset) {
        branch = var;
        break;
      }
    }
    if (branch < 0) return true;
    for (signed char choice : {kTrue, kFalse}) {
      assignment[branch] = choice;
      if (solve()) return true;
      assignment[branch] = kUnset;
    }
    for (int var : touched) assignment[var] = kUnset;
    return false;
  }
};

}  // namespace

std::optional<std::vector<bool>> sat_decide(const CnfFormula& formula, int max_variables) {
  if (formula.variable_count > max_variables)
    throw SizeLimitError("sat_decide limited to " + std::to_string(max_variables) +
                         " variables, got " + std::to_string(formula.variable_count));

  Dpll dpll(formula);
  if (!dpll.solve()) return std::nullopt;

  std::vector<bool> result(formula.variable_count, false);
  for (int var = 0; var < formula.variable_count; ++var)
    result[var] = dpll.assignment[var] == kTrue;  // unconstrained variables default to false
  if (!satisfies(formula, result)) throw std::logic_error("sat_decide produced a bad assignment");
  return result;
}

}  // namespace robsched::hardness
