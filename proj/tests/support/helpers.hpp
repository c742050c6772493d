#pragma once

#include "robsched/bench/generator.hpp"
#include "robsched/instance.hpp"

#include <random>
#include <vector>

namespace robsched::testsupport {

inline Value val(long long num, long long den = 1) { return Value(num, den); }

inline Instance identical_instance(int machines, int gamma,
                                   std::vector<std::pair<Value, Value>> jobs) {
  std::vector<JobTimes> times;
  times.reserve(jobs.size());
  for (auto& [nom, dev] : jobs) times.push_back({nom, dev});
  return Instance::identical(machines, gamma, std::move(times));
}

/// Independent worst-case oracle: walks every deviation subset by bitmask and
/// recomputes machine loads straight from the instance data. Shares no code
/// with the library's objective or scenario stream.
inline Value oracle_worst_case(const Instance& inst, const Schedule& schedule) {
  const int n = inst.job_count();
  Value best;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) > inst.gamma()) continue;
    for (int i = 0; i < inst.machine_count(); ++i) {
      Value load;
      for (int j = 0; j < n; ++j) {
        if (schedule.assignment[j] != i) continue;
        if (inst.is_forbidden(i, j)) {
          load = Value::forbidden();
          break;
        }
        load += inst.nominal_time(i, j);
        if (mask & (1u << j)) load += inst.deviation_time(i, j);
      }
      if (load > best) best = load;
    }
  }
  return best;
}

/// Uniformly random valid schedule (every job on some allowed machine).
inline Schedule random_schedule(const Instance& inst, std::mt19937_64& rng) {
  Schedule schedule;
  schedule.assignment.reserve(inst.job_count());
  for (int j = 0; j < inst.job_count(); ++j) {
    std::vector<int> allowed;
    for (int i = 0; i < inst.machine_count(); ++i)
      if (!inst.is_forbidden(i, j)) allowed.push_back(i);
    schedule.assignment.push_back(allowed[rng() % allowed.size()]);
  }
  return schedule;
}

/// Deterministic stream of small random instances cycling through the
/// non-gap generator families.
inline Instance random_instance(std::uint64_t seed, int n_max = 8, int m_max = 3,
                                int gamma_max = 3) {
  using bench::Family;
  static const Family families[] = {Family::IdenticalUniformRandom, Family::IdenticalCorrelated,
                                    Family::UnrelatedRandom, Family::UniformSpeeds};
  bench::GeneratorConfig config;
  config.seed = seed;
  config.family = families[seed % 4];
  config.n_max = n_max;
  config.m_max = m_max;
  config.gamma_max = gamma_max;
  return bench::generate(config);
}

inline Instance random_identical_instance(std::uint64_t seed, int n_max = 8, int m_max = 3,
                                          int gamma_max = 3) {
  bench::GeneratorConfig config;
  config.seed = seed;
  config.family =
      seed % 2 == 0 ? bench::Family::IdenticalUniformRandom : bench::Family::IdenticalCorrelated;
  config.n_max = n_max;
  config.m_max = m_max;
  config.gamma_max = gamma_max;
  return bench::generate(config);
}

}  // namespace robsched::testsupport
