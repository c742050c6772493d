#include "robsched/ptas/capacitated.hpp"

#include <stdexcept>
#include <string>

namespace robsched::ptas {

namespace {

Value type_capacity(const Rational& threshold, int gamma, const Rational& epsilon) {
  return Value(Rational(1) - threshold * gamma + epsilon);
}

std::vector<Value> regular_processing(const RoundedInstance& rounded, const Rational& threshold) {
  const auto& jobs = rounded.scaled.job_times();
  std::vector<Value> processing;
  processing.reserve(rounded.job_count());
  for (int j = 0; j < rounded.job_count(); ++j) {
    const Rational& dev = rounded.rounded_deviation[j].rational();
    if (dev >= threshold)
      processing.push_back(Value(jobs[j].nominal.rational() + dev - threshold));
    else
      processing.push_back(jobs[j].nominal);
  }
  return processing;
}

}  // namespace

Value TypedBuild::capacity_of_machine(int machine) const {
  return cti.types[cti.type_of_machine(machine)].capacity;
}

TypedBuild build_capacitated(const RoundedInstance& rounded, const ThresholdSet& set,
                             const Outline& outline) {
  if (static_cast<int>(outline.count.size()) != set.size())
    throw std::invalid_argument("outline does not match the threshold set");

  TypedBuild build;
  build.real_machine_count = rounded.machine_count();
  build.regular_job_count = rounded.job_count();
  build.cti.job_count = rounded.job_count();

  int machines = 0;
  for (int l = 0; l < set.size(); ++l) {
    const int count = outline.count[l];
    if (count == 0) continue;
    machines += count;
    build.cti.types.push_back(
        {count, type_capacity(set.values[l], set.gamma, set.epsilon),
         regular_processing(rounded, set.values[l])});
    for (int c = 0; c < count; ++c) {
      build.machine_threshold.push_back(set.values[l]);
      build.machine_is_clone.push_back(false);
    }
  }
  if (machines != rounded.machine_count())
    throw std::invalid_argument("outline counts do not sum to the machine count");
  return build;
}

TypedBuild build_capacitated_eptas(const RoundedInstance& rounded, const ThresholdSet& set,
                                   const RestrictedOutline& outline) {
  if (static_cast<int>(outline.count.size()) != set.size())
    throw std::invalid_argument("restricted outline does not match the threshold set");

  const int m = rounded.machine_count();
  int restricted_total = 0;
  for (int c : outline.count) restricted_total += c;
  if (2 * restricted_total < m || restricted_total > m)
    throw std::invalid_argument("restricted outline total must lie in [m/2, m]");
  const int dummy_count = 2 * restricted_total - m;

  TypedBuild build;
  build.real_machine_count = m;
  build.regular_job_count = rounded.job_count();
  build.cti.job_count = rounded.job_count() + dummy_count;

  for (int l = 0; l < set.size(); ++l) {
    const int count = outline.count[l];
    if (count == 0) continue;
    const Value capacity = type_capacity(set.values[l], set.gamma, set.epsilon);
    std::vector<Value> original = regular_processing(rounded, set.values[l]);
    std::vector<Value> clone = original;
    for (int d = 0; d < dummy_count; ++d) {
      original.push_back(Value::forbidden());  // dummies never sit on originals
      clone.push_back(capacity);               // one dummy fills a clone exactly
    }
    build.cti.types.push_back({count, capacity, std::move(original)});
    build.cti.types.push_back({count, capacity, std::move(clone)});
    for (int c = 0; c < count; ++c) {
      build.machine_threshold.push_back(set.values[l]);
      build.machine_is_clone.push_back(false);
    }
    for (int c = 0; c < count; ++c) {
      build.machine_threshold.push_back(set.values[l]);
      build.machine_is_clone.push_back(true);
    }
  }
  return build;
}

Schedule normalize_and_lift(const Schedule& typed_schedule, const TypedBuild& build,
                            const Rational& epsilon) {
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  const int machine_count = build.cti.total_machines();
  std::vector<Value> load = exact::machine_loads(build.cti, typed_schedule);

  std::vector<std::vector<int>> regular_jobs(machine_count);
  std::vector<int> dummy_count(machine_count, 0);
  for (int j = 0; j < build.cti.job_count; ++j) {
    int machine = typed_schedule.assignment[j];
    if (j < build.regular_job_count)
      regular_jobs[machine].push_back(j);
    else
      ++dummy_count[machine];
  }

  const Rational load_bound = Rational(1) + epsilon;
  const Rational moved_bound = Rational(1) + epsilon * 2;
  for (int i = 0; i < machine_count; ++i) {
    if (load[i] > build.capacity_of_machine(i).scaled_by(load_bound))
      throw std::invalid_argument("machine " + std::to_string(i) +
                                  " violates the (1+eps) load contract");
    if (dummy_count[i] > 1)
      throw std::invalid_argument("machine " + std::to_string(i) + " carries two dummy jobs");
    if (dummy_count[i] == 1 && !build.machine_is_clone[i])
      throw std::invalid_argument("dummy job placed on an original machine");
  }

  // Clear out every clone that carries a dummy: its regular jobs (at most an
  // eps*capacity sliver) move to a fresh original machine with the same
  // threshold.
  std::vector<bool> used_as_target(machine_count, false);
  for (int i = 0; i < machine_count; ++i) {
    if (dummy_count[i] == 0 || regular_jobs[i].empty()) continue;
    int target = -1;
    for (int candidate = 0; candidate < machine_count; ++candidate) {
      if (build.machine_is_clone[candidate] || used_as_target[candidate]) continue;
      if (build.machine_threshold[candidate] != build.machine_threshold[i]) continue;
      target = candidate;
      break;
    }
    if (target < 0)
      throw std::invalid_argument("no fresh original machine left for threshold " +
                                  rational_str(build.machine_threshold[i]));
    used_as_target[target] = true;
    const int type = build.cti.type_of_machine(target);
    for (int j : regular_jobs[i]) {
      load[target] += build.cti.types[type].processing[j];
      regular_jobs[target].push_back(j);
    }
    regular_jobs[i].clear();
    if (load[target] > build.capacity_of_machine(target).scaled_by(moved_bound))
      throw std::invalid_argument("moving jobs off machine " + std::to_string(i) +
                                  " overloads machine " + std::to_string(target));
  }

  // Drop machines holding a dummy and renumber the rest.
  Schedule lifted;
  lifted.assignment.assign(build.regular_job_count, -1);
  int next_real = 0;
  for (int i = 0; i < machine_count; ++i) {
    if (dummy_count[i] > 0) continue;
    if (next_real >= build.real_machine_count)
      throw std::invalid_argument("more dummy-free machines than real machines");
    for (int j : regular_jobs[i]) lifted.assignment[j] = next_real;
    ++next_real;
  }
  if (next_real != build.real_machine_count)
    throw std::invalid_argument("normalization left " + std::to_string(next_real) +
                                " machines, expected " +
                                std::to_string(build.real_machine_count));
  return lifted;
}

}  // namespace robsched::ptas
