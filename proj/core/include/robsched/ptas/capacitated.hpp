#pragma once

#include "robsched/exact/capacity.hpp"
#include "robsched/ptas/outline.hpp"
#include "robsched/ptas/rounding.hpp"

#include <vector>

namespace robsched::ptas {

/// A capacitated typed instance derived from a rounded instance and an
/// outline guess, together with the bookkeeping needed to map its machines
/// back to real ones. Jobs at indices >= regular_job_count are dummies that
/// exist only to occupy surplus cloned machines.
struct TypedBuild {
  exact::CapacitatedTypedInstance cti;
  std::vector<Rational> machine_threshold;  // per flattened typed machine
  std::vector<bool> machine_is_clone;       // per flattened typed machine
  int real_machine_count = 0;
  int regular_job_count = 0;

  Value capacity_of_machine(int machine) const;
};

/// One machine type per threshold carrying machines: capacity
/// 1 - gamma*threshold + eps, and processing time nominal + rounded
/// deviation - threshold for jobs whose rounded deviation reaches the
/// threshold, plain nominal otherwise. The capacity reserves exactly the
/// room the budgeted deviations will consume.
TypedBuild build_capacitated(const RoundedInstance& rounded, const ThresholdSet& set,
                             const Outline& outline);

/// Variant driven by a restricted outline: every type is doubled by a cloned
/// type with the same capacities and times, and 2*m' - m dummy jobs (where
/// m' is the restricted machine total) are added that only fit on clones and
/// fill one clone each. Feasible solutions therefore use exactly m machines
/// for real work.
TypedBuild build_capacitated_eptas(const RoundedInstance& rounded, const ThresholdSet& set,
                                   const RestrictedOutline& outline);

/// Turns a schedule of an EPTAS build (loads within (1+eps) of capacity)
/// into a schedule over the m real machines: regular jobs sharing a machine
/// with a dummy move to an unused original machine of the same threshold
/// (growing its load to at most (1+2*eps) of capacity), machines carrying a
/// dummy are dropped, and the survivors are renumbered. Throws when the
/// input violates the load contract.
Schedule normalize_and_lift(const Schedule& typed_schedule, const TypedBuild& build,
                            const Rational& epsilon);

}  // namespace robsched::ptas
