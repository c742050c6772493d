#include "robsched/instance.hpp"

#include <stdexcept>
#include <string>

namespace robsched {

const char* machine_kind_name(MachineKind kind) {
  switch (kind) {
    case MachineKind::Identical: return "identical";
    case MachineKind::Uniform: return "uniform";
    case MachineKind::Unrelated: return "unrelated";
  }
  return "?";
}

namespace {

void check_counts(int machine_count, int job_count, int gamma) {
  if (machine_count < 1) throw std::invalid_argument("instance needs at least one machine");
  if (job_count < 1) throw std::invalid_argument("instance needs at least one job");
  if (gamma < 0) throw std::invalid_argument("gamma must be non-negative");
}

void check_job_vector(const std::vector<JobTimes>& jobs) {
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    if (jobs[j].nominal.is_forbidden() || jobs[j].deviation.is_forbidden())
      throw std::invalid_argument("job " + std::to_string(j) +
                                  ": shared job times must be finite");
  }
}

}  // namespace

Instance Instance::identical(int machine_count, int gamma, std::vector<JobTimes> jobs) {
  check_counts(machine_count, static_cast<int>(jobs.size()), gamma);
  check_job_vector(jobs);
  Instance inst;
  inst.kind_ = MachineKind::Identical;
  inst.machine_count_ = machine_count;
  inst.job_count_ = static_cast<int>(jobs.size());
  inst.gamma_ = gamma;
  inst.jobs_ = std::move(jobs);
  return inst;
}

Instance Instance::uniform(std::vector<Rational> speeds, int gamma, std::vector<JobTimes> jobs) {
  check_counts(static_cast<int>(speeds.size()), static_cast<int>(jobs.size()), gamma);
  check_job_vector(jobs);
  for (std::size_t i = 0; i < speeds.size(); ++i) {
    if (speeds[i] <= 0)
      throw std::invalid_argument("machine " + std::to_string(i) + ": speed must be positive");
  }
  Instance inst;
  inst.kind_ = MachineKind::Uniform;
  inst.machine_count_ = static_cast<int>(speeds.size());
  inst.job_count_ = static_cast<int>(jobs.size());
  inst.gamma_ = gamma;
  inst.jobs_ = std::move(jobs);
  inst.speeds_ = std::move(speeds);
  return inst;
}

Instance Instance::unrelated(int gamma,
                             std::vector<std::vector<Value>> nominal,
                             std::vector<std::vector<Value>> deviation) {
  const int m = static_cast<int>(nominal.size());
  if (m < 1) throw std::invalid_argument("instance needs at least one machine");
  const int n = static_cast<int>(nominal[0].size());
  check_counts(m, n, gamma);
  if (deviation.size() != nominal.size())
    throw std::invalid_argument("nominal and deviation matrices differ in machine count");
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(nominal[i].size()) != n || static_cast<int>(deviation[i].size()) != n)
      throw std::invalid_argument("ragged processing-time matrix");
  }
  for (int j = 0; j < n; ++j) {
    bool feasible = false;
    for (int i = 0; i < m; ++i) {
      if (!nominal[i][j].is_forbidden() && !deviation[i][j].is_forbidden()) {
        feasible = true;
        break;
      }
    }
    if (!feasible)
      throw std::invalid_argument("job " + std::to_string(j) + " has no machine it can run on");
  }
  Instance inst;
  inst.kind_ = MachineKind::Unrelated;
  inst.machine_count_ = m;
  inst.job_count_ = n;
  inst.gamma_ = gamma;
  inst.nominal_ = std::move(nominal);
  inst.deviation_ = std::move(deviation);
  return inst;
}

void Instance::check_machine(int machine) const {
  if (machine < 0 || machine >= machine_count_)
    throw std::out_of_range("machine index " + std::to_string(machine) + " out of range");
}

void Instance::check_job(int job) const {
  if (job < 0 || job >= job_count_)
    throw std::out_of_range("job index " + std::to_string(job) + " out of range");
}

Value Instance::nominal_time(int machine, int job) const {
  check_machine(machine);
  check_job(job);
  switch (kind_) {
    case MachineKind::Identical: return jobs_[job].nominal;
    case MachineKind::Uniform: return jobs_[job].nominal.divided_by(speeds_[machine]);
    case MachineKind::Unrelated: return nominal_[machine][job];
  }
  throw std::logic_error("unreachable");
}

Value Instance::deviation_time(int machine, int job) const {
  check_machine(machine);
  check_job(job);
  switch (kind_) {
    case MachineKind::Identical: return jobs_[job].deviation;
    case MachineKind::Uniform: return jobs_[job].deviation.divided_by(speeds_[machine]);
    case MachineKind::Unrelated: return deviation_[machine][job];
  }
  throw std::logic_error("unreachable");
}

bool Instance::is_forbidden(int machine, int job) const {
  check_machine(machine);
  check_job(job);
  if (kind_ != MachineKind::Unrelated) return false;
  return nominal_[machine][job].is_forbidden() || deviation_[machine][job].is_forbidden();
}

const std::vector<JobTimes>& Instance::job_times() const {
  if (kind_ == MachineKind::Unrelated)
    throw std::logic_error("unrelated instances have no shared job vector");
  return jobs_;
}

const std::vector<Rational>& Instance::speeds() const {
  if (kind_ != MachineKind::Uniform) throw std::logic_error("only uniform instances have speeds");
  return speeds_;
}

bool Instance::all_deviations_zero() const {
  if (kind_ != MachineKind::Unrelated) {
    for (const auto& jt : jobs_)
      if (!jt.deviation.is_zero()) return false;
    return true;
  }
  for (int i = 0; i < machine_count_; ++i)
    for (int j = 0; j < job_count_; ++j)
      if (!is_forbidden(i, j) && !deviation_[i][j].is_zero()) return false;
  return true;
}

}  // namespace robsched
