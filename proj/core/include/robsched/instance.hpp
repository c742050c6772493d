#pragma once

#include "robsched/value.hpp"

#include <vector>

namespace robsched {

enum class MachineKind { Identical, Uniform, Unrelated };

const char* machine_kind_name(MachineKind kind);

/// Per-job processing data for identical and uniform machines.
struct JobTimes {
  Value nominal;    // baseline processing time
  Value deviation;  // extra time charged when the job deviates
};

/// Total assignment of jobs to machines: assignment[job] = machine.
struct Schedule {
  std::vector<int> assignment;
};

/// A deviation scenario: the set of jobs (sorted, unique) that take their
/// deviated processing time. At most `gamma` jobs may deviate.
struct Scenario {
  std::vector<int> deviating;
};

/// A scheduling instance under budgeted uncertainty. The budget `gamma`
/// bounds how many jobs may deviate simultaneously.
///
/// Identical machines share one JobTimes vector; uniform machines divide it
/// by per-machine speeds; unrelated machines carry full matrices in which
/// Forbidden entries mark disallowed assignments. Every job is guaranteed at
/// least one machine it can run on.
class Instance {
public:
  static Instance identical(int machine_count, int gamma, std::vector<JobTimes> jobs);
  static Instance uniform(std::vector<Rational> speeds, int gamma, std::vector<JobTimes> jobs);
  static Instance unrelated(int gamma,
                            std::vector<std::vector<Value>> nominal,
                            std::vector<std::vector<Value>> deviation);

  MachineKind kind() const { return kind_; }
  int machine_count() const { return machine_count_; }
  int job_count() const { return job_count_; }
  int gamma() const { return gamma_; }

  Value nominal_time(int machine, int job) const;
  Value deviation_time(int machine, int job) const;

  /// True when the job must not be placed on the machine (either component
  /// of its processing time is Forbidden).
  bool is_forbidden(int machine, int job) const;

  /// Job vector shared by all machines. Throws for unrelated instances.
  const std::vector<JobTimes>& job_times() const;

  /// Machine speeds. Throws unless the instance is uniform.
  const std::vector<Rational>& speeds() const;

  /// True when every deviation entry is zero (the adversary has no power).
  bool all_deviations_zero() const;

private:
  Instance() = default;
  void check_machine(int machine) const;
  void check_job(int job) const;

  MachineKind kind_ = MachineKind::Identical;
  int machine_count_ = 0;
  int job_count_ = 0;
  int gamma_ = 0;
  std::vector<JobTimes> jobs_;                     // identical / uniform
  std::vector<Rational> speeds_;                   // uniform
  std::vector<std::vector<Value>> nominal_;        // unrelated, [machine][job]
  std::vector<std::vector<Value>> deviation_;      // unrelated, [machine][job]
};

}  // namespace robsched
