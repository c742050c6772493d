#include "robsched/hardness/reduction.hpp"

#include "robsched/objective.hpp"

#include <stdexcept>

namespace robsched::hardness {

std::vector<int> ReductionInstance::clause_machines(int clause) const {
  if (clause < 0 || clause >= clause_count) throw std::out_of_range("clause index out of range");
  std::vector<int> machines;
  for (int i = 0; i < instance.machine_count(); ++i)
    if (!instance.is_forbidden(i, clause_job(clause))) machines.push_back(i);
  return machines;
}

ReductionInstance encode(const CnfFormula& formula) {
  const int variables = formula.variable_count;
  const int clauses = static_cast<int>(formula.clauses.size());
  if (variables < 1) throw std::invalid_argument("formula needs at least one variable");

  const int m = 2 * variables;
  const int n = variables + clauses;
  std::vector<std::vector<Value>> nominal(m, std::vector<Value>(n, Value::forbidden()));
  std::vector<std::vector<Value>> deviation(m, std::vector<Value>(n, Value::forbidden()));

  // Variable jobs: unit nominal time on both polarity machines, no deviation.
  for (int v = 0; v < variables; ++v) {
    for (int machine : {2 * v, 2 * v + 1}) {
      nominal[machine][v] = Value(1);
      deviation[machine][v] = Value(0);
    }
  }
  // Clause jobs: free nominally, deviation 1 on their literal machines.
  for (int c = 0; c < clauses; ++c) {
    const int job = variables + c;
    for (const Literal& lit : formula.clauses[c]) {
      const int machine = 2 * lit.variable + (lit.positive ? 1 : 0);
      nominal[machine][job] = Value(0);
      deviation[machine][job] = Value(1);
    }
  }

  return ReductionInstance{
      Instance::unrelated(/*gamma=*/1, std::move(nominal), std::move(deviation)), variables,
      clauses};
}

std::vector<bool> decode(const ReductionInstance& reduction, const CnfFormula& formula,
                         const Schedule& schedule) {
  if (worst_case_makespan(reduction.instance, schedule) > Value(1))
    throw std::domain_error("decode requires a schedule of worst-case makespan at most 1");

  std::vector<bool> assignment(reduction.variable_count, false);
  for (int v = 0; v < reduction.variable_count; ++v)
    assignment[v] = schedule.assignment[reduction.variable_job(v)] == reduction.false_machine(v);
  if (!satisfies(formula, assignment))
    throw std::logic_error("decoded assignment does not satisfy the formula");
  return assignment;
}

Schedule schedule_from_assignment(const ReductionInstance& reduction, const CnfFormula& formula,
                                  const std::vector<bool>& assignment) {
  if (!satisfies(formula, assignment))
    throw std::invalid_argument("assignment does not satisfy the formula");

  Schedule schedule;
  schedule.assignment.assign(reduction.instance.job_count(), -1);
  // A true variable parks its job on the false machine, freeing the true
  // machine for clause jobs (and vice versa).
  for (int v = 0; v < reduction.variable_count; ++v)
    schedule.assignment[reduction.variable_job(v)] =
        assignment[v] ? reduction.false_machine(v) : reduction.true_machine(v);
  for (int c = 0; c < reduction.clause_count; ++c) {
    for (const Literal& lit : formula.clauses[c]) {
      if (assignment[lit.variable] == lit.positive) {
        schedule.assignment[reduction.clause_job(c)] = reduction.literal_machine(lit);
        break;
      }
    }
  }
  return schedule;
}

}  // namespace robsched::hardness
