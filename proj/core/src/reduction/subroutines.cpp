#include "robsched/reduction/subroutines.hpp"

#include "robsched/exact/capacity.hpp"

#include <algorithm>
#include <stdexcept>

namespace robsched::reduction {

std::optional<Schedule> ExactCmaxSubroutine::run(const ClassicalInstance& instance,
                                                 const Value& threshold) const {
  if (threshold.is_forbidden()) throw std::domain_error("threshold must be finite");

  // Group machines with identical processing rows into one type.
  exact::CapacitatedTypedInstance cti;
  cti.job_count = instance.job_count;
  std::vector<int> machine_of_slot;  // flattened typed machine -> original machine
  std::vector<std::vector<int>> members;
  for (int i = 0; i < instance.machine_count; ++i) {
    bool grouped = false;
    for (std::size_t t = 0; t < cti.types.size(); ++t) {
      if (cti.types[t].processing == instance.processing[i]) {
        ++cti.types[t].multiplicity;
        members[t].push_back(i);
        grouped = true;
        break;
      }
    }
    if (!grouped) {
      cti.types.push_back({1, Value(1), instance.processing[i]});
      members.push_back({i});
    }
  }
  if (threshold.is_zero()) {
    // Capacities must be positive; makespan 0 needs every job on a zero cell.
    Schedule schedule;
    schedule.assignment.assign(instance.job_count, -1);
    for (int j = 0; j < instance.job_count; ++j) {
      for (int i = 0; i < instance.machine_count; ++i) {
        if (!instance.processing[i][j].is_forbidden() && instance.processing[i][j].is_zero()) {
          schedule.assignment[j] = i;
          break;
        }
      }
      if (schedule.assignment[j] < 0) return std::nullopt;
    }
    return schedule;
  }
  for (auto& type : cti.types) type.capacity = threshold;
  for (const auto& group : members)
    for (int i : group) machine_of_slot.push_back(i);

  auto outcome = exact::capacity_decision_exact(cti);
  if (!outcome.accepted()) return std::nullopt;

  Schedule schedule;
  schedule.assignment.assign(instance.job_count, -1);
  for (int j = 0; j < instance.job_count; ++j)
    schedule.assignment[j] = machine_of_slot[outcome.schedule->assignment[j]];
  if (classical_makespan(instance, schedule) > threshold)
    throw std::logic_error("exact subroutine produced a schedule above the threshold");
  return schedule;
}

std::optional<Schedule> ListSchedulingSubroutine::run(const ClassicalInstance& instance,
                                                      const Value& threshold) const {
  if (instance.structure != MachineKind::Identical)
    throw std::invalid_argument("list scheduling requires identical machines");
  if (threshold.is_forbidden()) throw std::domain_error("threshold must be finite");

  const int m = instance.machine_count;
  const int n = instance.job_count;
  Value total;
  for (int j = 0; j < n; ++j) {
    const Value& p = instance.processing[0][j];
    if (p.is_forbidden()) return std::nullopt;  // job fits nowhere
    if (p > threshold) return std::nullopt;     // certificate: single job above T
    total += p;
  }
  if (total > threshold.scaled_by(Rational(m))) return std::nullopt;  // average above T

  Schedule schedule;
  schedule.assignment.assign(n, 0);
  std::vector<Value> load(m);
  for (int j = 0; j < n; ++j) {
    int target = 0;
    for (int i = 1; i < m; ++i)
      if (load[i] < load[target]) target = i;
    load[target] += instance.processing[0][j];
    schedule.assignment[j] = target;
  }
  // With both certificates absent the greedy makespan is at most
  // average plus largest job, hence within 2*T.
  if (classical_makespan(instance, schedule) > threshold + threshold)
    throw std::logic_error("list scheduling exceeded twice the threshold");
  return schedule;
}

}  // namespace robsched::reduction
