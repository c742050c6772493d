#pragma once

#include "robsched/instance.hpp"

#include <optional>
#include <vector>

namespace robsched::exact {

/// A group of interchangeable machines: same capacity, same processing time
/// for every job. Forbidden entries mark jobs the type cannot run.
struct MachineType {
  int multiplicity = 0;
  Value capacity;
  std::vector<Value> processing;  // one entry per job
};

/// Classical (no uncertainty) scheduling instance with per-type capacities.
/// Machines are addressed by flattening the types in order.
struct CapacitatedTypedInstance {
  std::vector<MachineType> types;
  int job_count = 0;

  int total_machines() const;
  int type_of_machine(int machine) const;
  void validate() const;
};

/// Accept carries a schedule meeting the per-machine capacity bound;
/// a missing schedule is a certified rejection: no feasible schedule exists.
struct DecisionOutcome {
  std::optional<Schedule> schedule;
  bool accepted() const { return schedule.has_value(); }
};

/// Exact decision: returns a schedule with load(machine) <= capacity(machine)
/// for every machine when one exists, otherwise a certified rejection.
///
/// `slack` widens the bound a caller is entitled to ((1+slack)*capacity); the
/// exact search never needs it and always returns schedules within the plain
/// capacities, which satisfies the contract for any slack >= 0.
DecisionOutcome capacity_decision_exact(const CapacitatedTypedInstance& cti,
                                        const Rational& slack = Rational(0));

/// Per-machine loads of a schedule of `cti`; throws on invalid schedules or
/// forbidden placements.
std::vector<Value> machine_loads(const CapacitatedTypedInstance& cti, const Schedule& schedule);

}  // namespace robsched::exact
