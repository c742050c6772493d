#pragma once

#include "robsched/instance.hpp"

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace robsched::exact {

/// Budgets for the enumeration-based oracles. Callers with different needs
/// (tests vs. benchmarks) pass their own.
struct EnumerationLimits {
  int max_scenario_jobs = 20;            // job count cap for scenario streams
  std::uint64_t max_assignments = 2'000'000;  // cap on m^n for brute force
};

/// Visits every deviation scenario (subset of jobs of size at most gamma)
/// exactly once, ordered by size and lexicographically within a size. The
/// visitor returns false to stop early. Throws SizeLimitError when
/// job_count exceeds the configured limit.
void for_each_scenario(int job_count, int gamma,
                       const std::function<bool(const Scenario&)>& visit,
                       const EnumerationLimits& limits = {});

/// Materialized variant of for_each_scenario.
std::vector<Scenario> enumerate_scenarios(int job_count, int gamma,
                                          const EnumerationLimits& limits = {});

/// The adversary's best response: a scenario attaining the worst-case
/// makespan of the schedule, ties broken by enumeration order, together with
/// that makespan.
std::pair<Scenario, Value> adversary_argmax(const Instance& instance, const Schedule& schedule,
                                            const EnumerationLimits& limits = {});

}  // namespace robsched::exact
