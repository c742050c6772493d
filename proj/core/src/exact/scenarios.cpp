#include "robsched/exact/scenarios.hpp"

#include "robsched/errors.hpp"
#include "robsched/objective.hpp"

#include <algorithm>
#include <string>

namespace robsched::exact {

void for_each_scenario(int job_count, int gamma,
                       const std::function<bool(const Scenario&)>& visit,
                       const EnumerationLimits& limits) {
  if (job_count < 0) throw std::invalid_argument("negative job count");
  if (gamma < 0) throw std::invalid_argument("negative gamma");
  if (job_count > limits.max_scenario_jobs)
    throw SizeLimitError("scenario enumeration limited to " +
                         std::to_string(limits.max_scenario_jobs) + " jobs, got " +
                         std::to_string(job_count));

  const int max_size = std::min(gamma, job_count);
  std::vector<int> pick;
  for (int size = 0; size <= max_size; ++size) {
    pick.assign(size, 0);
    for (int k = 0; k < size; ++k) pick[k] = k;
    while (true) {
      if (!visit(Scenario{pick})) return;
      if (size == 0) break;
      // Advance the combination odometer.
      int k = size - 1;
      while (k >= 0 && pick[k] == job_count - size + k) --k;
      if (k < 0) break;
      ++pick[k];
      for (int l = k + 1; l < size; ++l) pick[l] = pick[l - 1] + 1;
    }
  }
}

std::vector<Scenario> enumerate_scenarios(int job_count, int gamma,
                                          const EnumerationLimits& limits) {
  std::vector<Scenario> all;
  for_each_scenario(job_count, gamma,
                    [&](const Scenario& s) {
                      all.push_back(s);
                      return true;
                    },
                    limits);
  return all;
}

std::pair<Scenario, Value> adversary_argmax(const Instance& instance, const Schedule& schedule,
                                            const EnumerationLimits& limits) {
  Scenario best;
  Value best_value;
  bool first = true;
  for_each_scenario(instance.job_count(), instance.gamma(),
                    [&](const Scenario& s) {
                      Value v = scenario_makespan(instance, schedule, s);
                      if (first || v > best_value) {
                        best = s;
                        best_value = v;
                        first = false;
                      }
                      return true;
                    },
                    limits);
  return {best, best_value};
}

}  // namespace robsched::exact
