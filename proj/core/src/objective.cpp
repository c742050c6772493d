#include "robsched/objective.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace robsched {

namespace {

void require_valid(const Instance& instance, const Schedule& schedule) {
  if (static_cast<int>(schedule.assignment.size()) != instance.job_count())
    throw std::invalid_argument("schedule assigns " +
                                std::to_string(schedule.assignment.size()) + " jobs, expected " +
                                std::to_string(instance.job_count()));
  for (int j = 0; j < instance.job_count(); ++j) {
    int i = schedule.assignment[j];
    if (i < 0 || i >= instance.machine_count())
      throw std::invalid_argument("job " + std::to_string(j) + " assigned to machine " +
                                  std::to_string(i) + ", which does not exist");
  }
}

}  // namespace

std::vector<int> gamma_set(const Instance& instance, int machine, std::span<const int> jobs) {
  if (machine < 0 || machine >= instance.machine_count())
    throw std::out_of_range("machine index " + std::to_string(machine) + " out of range");
  for (int j : jobs) {
    if (j < 0 || j >= instance.job_count())
      throw std::invalid_argument("job index " + std::to_string(j) + " out of range");
    if (instance.is_forbidden(machine, j))
      throw std::invalid_argument("job " + std::to_string(j) + " is forbidden on machine " +
                                  std::to_string(machine));
  }

  std::vector<int> picked(jobs.begin(), jobs.end());
  if (static_cast<int>(picked.size()) > instance.gamma()) {
    // Largest deviation first, smaller index wins ties.
    std::sort(picked.begin(), picked.end(), [&](int a, int b) {
      Value da = instance.deviation_time(machine, a);
      Value db = instance.deviation_time(machine, b);
      if (da != db) return da > db;
      return a < b;
    });
    picked.resize(instance.gamma());
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

Value worst_case_load(const Instance& instance, int machine, std::span<const int> jobs) {
  for (int j : jobs) {
    if (j < 0 || j >= instance.job_count())
      throw std::invalid_argument("job index " + std::to_string(j) + " out of range");
    if (instance.is_forbidden(machine, j)) return Value::forbidden();
  }
  Value load;
  for (int j : jobs) load += instance.nominal_time(machine, j);
  for (int j : gamma_set(instance, machine, jobs)) load += instance.deviation_time(machine, j);
  return load;
}

Value worst_case_makespan(const Instance& instance, const Schedule& schedule) {
  require_valid(instance, schedule);
  auto groups = jobs_by_machine(instance, schedule);
  Value makespan;
  for (int i = 0; i < instance.machine_count(); ++i) {
    bool blocked = false;
    for (int j : groups[i]) {
      if (instance.is_forbidden(i, j)) {
        blocked = true;
        break;
      }
    }
    Value load = blocked ? Value::forbidden() : worst_case_load(instance, i, groups[i]);
    if (load > makespan) makespan = load;
  }
  return makespan;
}

Value scenario_makespan(const Instance& instance, const Schedule& schedule,
                        const Scenario& scenario) {
  require_valid(instance, schedule);
  std::unordered_set<int> deviating;
  for (int j : scenario.deviating) {
    if (j < 0 || j >= instance.job_count())
      throw std::invalid_argument("scenario names job " + std::to_string(j) +
                                  ", which does not exist");
    if (!deviating.insert(j).second)
      throw std::invalid_argument("scenario lists job " + std::to_string(j) + " twice");
  }
  if (static_cast<int>(deviating.size()) > instance.gamma())
    throw std::invalid_argument("scenario deviates " + std::to_string(deviating.size()) +
                                " jobs, budget is " + std::to_string(instance.gamma()));

  Value makespan;
  auto groups = jobs_by_machine(instance, schedule);
  for (int i = 0; i < instance.machine_count(); ++i) {
    Value load;
    for (int j : groups[i]) {
      if (instance.is_forbidden(i, j)) {
        load = Value::forbidden();
        break;
      }
      load += instance.nominal_time(i, j);
      if (deviating.contains(j)) load += instance.deviation_time(i, j);
    }
    if (load > makespan) makespan = load;
  }
  return makespan;
}

std::optional<std::string> validate(const Instance& instance, const Schedule& schedule) {
  if (static_cast<int>(schedule.assignment.size()) != instance.job_count())
    return "assignment has length " + std::to_string(schedule.assignment.size()) +
           ", expected " + std::to_string(instance.job_count());
  for (int j = 0; j < instance.job_count(); ++j) {
    int i = schedule.assignment[j];
    if (i < 0 || i >= instance.machine_count())
      return "job " + std::to_string(j) + " assigned to nonexistent machine " + std::to_string(i);
    if (instance.is_forbidden(i, j))
      return "job " + std::to_string(j) + " assigned to machine " + std::to_string(i) +
             ", where it is forbidden";
  }
  return std::nullopt;
}

std::vector<std::vector<int>> jobs_by_machine(const Instance& instance, const Schedule& schedule) {
  require_valid(instance, schedule);
  std::vector<std::vector<int>> groups(instance.machine_count());
  for (int j = 0; j < instance.job_count(); ++j) groups[schedule.assignment[j]].push_back(j);
  return groups;
}

}  // namespace robsched
