#include "robsched/reduction/classical.hpp"

#include <stdexcept>
#include <string>

namespace robsched::reduction {

const Value& ClassicalInstance::processing_time(int machine, int job) const {
  if (machine < 0 || machine >= machine_count)
    throw std::out_of_range("machine index " + std::to_string(machine) + " out of range");
  if (job < 0 || job >= job_count)
    throw std::out_of_range("job index " + std::to_string(job) + " out of range");
  return processing[machine][job];
}

ClassicalInstance build_classical(const Instance& instance, const Value& threshold) {
  ClassicalInstance out;
  out.structure = instance.kind();
  out.machine_count = instance.machine_count();
  out.job_count = instance.job_count();
  out.processing.assign(out.machine_count, std::vector<Value>(out.job_count));

  if (instance.gamma() == 0) {
    for (int i = 0; i < out.machine_count; ++i)
      for (int j = 0; j < out.job_count; ++j)
        out.processing[i][j] =
            instance.is_forbidden(i, j) ? Value::forbidden() : instance.nominal_time(i, j);
    return out;
  }

  if (threshold.is_forbidden() || threshold.is_zero())
    throw std::domain_error("threshold must be finite and positive");
  const Rational cutoff = threshold.rational() / instance.gamma();

  for (int i = 0; i < out.machine_count; ++i) {
    for (int j = 0; j < out.job_count; ++j) {
      if (instance.is_forbidden(i, j)) {
        out.processing[i][j] = Value::forbidden();
        continue;
      }
      Value deviation = instance.deviation_time(i, j);
      // Strict comparison: a deviation exactly at the cutoff stays small.
      if (deviation.rational() > cutoff)
        out.processing[i][j] = instance.nominal_time(i, j) + deviation;
      else
        out.processing[i][j] = instance.nominal_time(i, j);
    }
  }
  return out;
}

Value classical_makespan(const ClassicalInstance& instance, const Schedule& schedule) {
  if (static_cast<int>(schedule.assignment.size()) != instance.job_count)
    throw std::invalid_argument("schedule length does not match job count");
  std::vector<Value> load(instance.machine_count);
  for (int j = 0; j < instance.job_count; ++j) {
    int i = schedule.assignment[j];
    if (i < 0 || i >= instance.machine_count)
      throw std::invalid_argument("job " + std::to_string(j) + " assigned to nonexistent machine");
    load[i] += instance.processing[i][j];
  }
  Value makespan;
  for (const Value& l : load)
    if (l > makespan) makespan = l;
  return makespan;
}

std::optional<std::string> validate(const ClassicalInstance& instance, const Schedule& schedule) {
  if (static_cast<int>(schedule.assignment.size()) != instance.job_count)
    return "assignment has length " + std::to_string(schedule.assignment.size()) + ", expected " +
           std::to_string(instance.job_count);
  for (int j = 0; j < instance.job_count; ++j) {
    int i = schedule.assignment[j];
    if (i < 0 || i >= instance.machine_count)
      return "job " + std::to_string(j) + " assigned to nonexistent machine " + std::to_string(i);
    if (instance.processing[i][j].is_forbidden())
      return "job " + std::to_string(j) + " assigned to machine " + std::to_string(i) +
             ", where it is forbidden";
  }
  return std::nullopt;
}

}  // namespace robsched::reduction
