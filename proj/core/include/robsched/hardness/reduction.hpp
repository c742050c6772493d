#pragma once

#include "robsched/hardness/cnf.hpp"
#include "robsched/instance.hpp"

#include <vector>

namespace robsched::hardness {

/// Gap instance built from a 3-CNF formula: two machines per variable (one
/// for each polarity) and one job per variable and per clause, with a
/// deviation budget of one. Its optimal worst-case makespan is exactly 1
/// when the formula is satisfiable and at least 2 otherwise.
struct ReductionInstance {
  Instance instance;
  int variable_count = 0;
  int clause_count = 0;

  int false_machine(int variable) const { return 2 * variable; }
  int true_machine(int variable) const { return 2 * variable + 1; }
  int variable_job(int variable) const { return variable; }
  int clause_job(int clause) const { return variable_count + clause; }

  /// The machine a literal points at: the polarity machine that is free
  /// exactly when the literal is satisfied.
  int literal_machine(const Literal& lit) const {
    return lit.positive ? true_machine(lit.variable) : false_machine(lit.variable);
  }

  /// The (at most three) machines the clause job may run on.
  std::vector<int> clause_machines(int clause) const;
};

/// Builds the gap instance. Variable jobs cost 1 on their two polarity
/// machines and cannot run elsewhere; clause jobs cost nothing but deviate
/// by 1 on the machines of their literals and cannot run elsewhere.
ReductionInstance encode(const CnfFormula& formula);

/// Reads a truth assignment off a schedule of worst-case makespan at most 1:
/// a variable is true exactly when its job sits on the false-polarity
/// machine, leaving the true machine free. The result satisfies the formula.
/// Throws std::domain_error when the schedule costs more than 1.
std::vector<bool> decode(const ReductionInstance& reduction, const CnfFormula& formula,
                         const Schedule& schedule);

/// Forward construction: the canonical makespan-1 schedule induced by a
/// satisfying assignment.
Schedule schedule_from_assignment(const ReductionInstance& reduction, const CnfFormula& formula,
                                  const std::vector<bool>& assignment);

}  // namespace robsched::hardness
