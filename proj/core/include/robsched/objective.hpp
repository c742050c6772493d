#pragma once

#include "robsched/instance.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace robsched {

/// The jobs charged for deviation on `machine`: all of them when there are
/// at most `gamma` of them, otherwise the `gamma` jobs with the largest
/// deviation times, ties broken towards the smaller job index. Returned
/// sorted ascending.
///
/// Preconditions: job indices valid and not forbidden on the machine.
std::vector<int> gamma_set(const Instance& instance, int machine, std::span<const int> jobs);

/// Worst-case load of `machine` carrying exactly `jobs`: the sum of nominal
/// times plus the deviation times of the gamma_set. Returns Forbidden when
/// any job is forbidden on the machine.
Value worst_case_load(const Instance& instance, int machine, std::span<const int> jobs);

/// Worst-case makespan of a schedule: the maximum worst-case load over all
/// machines. Throws std::invalid_argument on structurally invalid schedules;
/// returns Forbidden when some job sits on a machine it is forbidden on.
Value worst_case_makespan(const Instance& instance, const Schedule& schedule);

/// Makespan in one fixed scenario: deviating jobs are charged nominal plus
/// deviation, everyone else nominal only. Throws std::invalid_argument when
/// the scenario exceeds the deviation budget or the schedule is invalid.
Value scenario_makespan(const Instance& instance, const Schedule& schedule,
                        const Scenario& scenario);

/// Checks Schedule invariants (total assignment, machine indices in range,
/// no forbidden placement). Returns std::nullopt when the schedule is valid,
/// otherwise a description of the first violation found.
std::optional<std::string> validate(const Instance& instance, const Schedule& schedule);

/// Jobs grouped per machine, each group sorted ascending.
std::vector<std::vector<int>> jobs_by_machine(const Instance& instance, const Schedule& schedule);

}  // namespace robsched
