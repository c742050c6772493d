#pragma once

#include "robsched/instance.hpp"

#include <optional>
#include <string>
#include <vector>

namespace robsched::reduction {

/// A classical makespan instance (no uncertainty) obtained from a robust
/// one. `structure` records the machine structure of the source instance;
/// for identical sources all rows are equal, for uniform sources the rows
/// are threshold-dependent and in general do not factor into length/speed.
struct ClassicalInstance {
  MachineKind structure = MachineKind::Identical;
  int machine_count = 0;
  int job_count = 0;
  std::vector<std::vector<Value>> processing;  // [machine][job]

  const Value& processing_time(int machine, int job) const;
};

/// Threshold transformation: a job whose deviation on a machine exceeds
/// threshold/gamma (strictly) is charged nominal plus deviation there,
/// everyone else keeps the nominal time. Forbidden propagates. With a zero
/// deviation budget the nominal matrix is returned unchanged.
///
/// Requires threshold > 0 whenever gamma >= 1.
ClassicalInstance build_classical(const Instance& instance, const Value& threshold);

/// Plain makespan of a schedule of a classical instance; Forbidden when a
/// job sits on a machine it cannot run on.
Value classical_makespan(const ClassicalInstance& instance, const Schedule& schedule);

std::optional<std::string> validate(const ClassicalInstance& instance, const Schedule& schedule);

}  // namespace robsched::reduction
