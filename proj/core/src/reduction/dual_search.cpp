#include "robsched/reduction/dual_search.hpp"

#include "robsched/exact/solvers.hpp"
#include "robsched/objective.hpp"

#include <stdexcept>

namespace robsched::reduction {

std::optional<Schedule> dual_step(const Instance& instance, const Value& threshold,
                                  const CmaxSubroutine& subroutine) {
  if (threshold.is_forbidden() || (threshold.is_zero() && instance.gamma() >= 1))
    throw std::domain_error("threshold must be finite and positive");

  ClassicalInstance classical = build_classical(instance, threshold);
  std::optional<Schedule> schedule = subroutine.run(classical, threshold);
  if (!schedule) return std::nullopt;

  Value classical_value = classical_makespan(classical, *schedule);
  if (classical_value > threshold.scaled_by(subroutine.guarantee()))
    throw std::logic_error("subroutine violated its guarantee");
  // The transformed makespan can miss at most one budget's worth of small
  // deviations per machine, each below threshold/gamma.
  Value robust_value = worst_case_makespan(instance, *schedule);
  if (robust_value > threshold.scaled_by(subroutine.guarantee() + 1))
    throw std::logic_error("dual step exceeded its accept bound");
  return schedule;
}

namespace {

/// Schedule witnessing worst-case makespan zero, when one exists.
std::optional<Schedule> zero_schedule(const Instance& instance) {
  Schedule schedule;
  schedule.assignment.assign(instance.job_count(), -1);
  for (int j = 0; j < instance.job_count(); ++j) {
    for (int i = 0; i < instance.machine_count(); ++i) {
      if (instance.is_forbidden(i, j)) continue;
      bool zero_cost = instance.nominal_time(i, j).is_zero() &&
                       (instance.gamma() == 0 || instance.deviation_time(i, j).is_zero());
      if (zero_cost) {
        schedule.assignment[j] = i;
        break;
      }
    }
    if (schedule.assignment[j] < 0) return std::nullopt;
  }
  return schedule;
}

}  // namespace

Value search_lower_bound(const Instance& instance) {
  const int m = instance.machine_count();
  const int n = instance.job_count();

  if (m == 1) {
    std::vector<int> all(n);
    for (int j = 0; j < n; ++j) all[j] = j;
    return worst_case_load(instance, 0, all);
  }

  Value single_job;
  Value total_min_nominal;
  for (int j = 0; j < n; ++j) {
    Value cheapest = Value::forbidden();
    Value cheapest_nominal = Value::forbidden();
    for (int i = 0; i < m; ++i) {
      if (instance.is_forbidden(i, j)) continue;
      Value with_deviation = instance.nominal_time(i, j);
      if (instance.gamma() >= 1) with_deviation += instance.deviation_time(i, j);
      if (with_deviation < cheapest) cheapest = with_deviation;
      if (instance.nominal_time(i, j) < cheapest_nominal)
        cheapest_nominal = instance.nominal_time(i, j);
    }
    if (cheapest > single_job) single_job = cheapest;
    total_min_nominal += cheapest_nominal;
  }
  Value average = total_min_nominal.divided_by(Rational(m));
  return single_job > average ? single_job : average;
}

SearchResult binary_search_solve(const Instance& instance, const ThresholdDecider& decider,
                                 const Rational& delta) {
  if (delta <= 0) throw std::invalid_argument("delta must be positive");

  if (auto zero = zero_schedule(instance)) {
    return {*zero, Value(0), Value(0), {}};
  }

  SearchResult result;
  const Value lower = search_lower_bound(instance);
  if (lower.is_zero()) throw std::logic_error("lower bound vanished on a nonzero instance");

  Schedule greedy = exact::greedy_schedule(instance);
  const Value upper = worst_case_makespan(instance, greedy);

  auto probe = [&](const Value& threshold) {
    std::optional<Schedule> accepted = decider(instance, threshold);
    result.probes.push_back({threshold, accepted.has_value()});
    return accepted;
  };

  if (auto accepted = probe(lower)) {
    result.schedule = *accepted;
    result.threshold = lower;
    result.value = worst_case_makespan(instance, result.schedule);
    return result;
  }

  // Grid LB*(1+delta)^k. The greedy schedule already witnesses acceptance at
  // the top of the grid, so only interior points need probing.
  const Rational step = Rational(1) + delta;
  std::vector<Value> grid{lower};
  while (grid.back() < upper) grid.push_back(grid.back().scaled_by(step));

  int rejected = 0;
  int accepted_index = static_cast<int>(grid.size()) - 1;
  Schedule best = greedy;
  Value best_threshold = grid.back();

  while (accepted_index - rejected > 1) {
    int mid = (rejected + accepted_index) / 2;
    if (auto schedule = probe(grid[mid])) {
      accepted_index = mid;
      best = *schedule;
      best_threshold = grid[mid];
    } else {
      rejected = mid;
    }
  }

  // Prefer the greedy schedule when it beats the accepted one.
  Value best_value = worst_case_makespan(instance, best);
  Value greedy_value = worst_case_makespan(instance, greedy);
  if (greedy_value < best_value) {
    best = greedy;
    best_value = greedy_value;
  }

  result.schedule = std::move(best);
  result.value = best_value;
  result.threshold = best_threshold;
  return result;
}

SearchResult binary_search_solve(const Instance& instance, const CmaxSubroutine& subroutine,
                                 const Rational& delta) {
  return binary_search_solve(
      instance,
      [&subroutine](const Instance& inst, const Value& threshold) {
        return dual_step(inst, threshold, subroutine);
      },
      delta);
}

}  // namespace robsched::reduction
