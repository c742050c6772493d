#pragma once

#include "robsched/exact/scenarios.hpp"
#include "robsched/instance.hpp"

namespace robsched::exact {

struct SolveResult {
  Schedule schedule;
  Value value;
};

/// Deterministic list-scheduling heuristic: jobs by largest nominal plus
/// deviation first, each placed on the machine whose worst-case load grows
/// least. Used as an upper bound and as the branch-and-bound incumbent seed.
Schedule greedy_schedule(const Instance& instance);

/// Full enumeration of all machine^job assignments, minimizing the
/// worst-case makespan, ties resolved towards the lexicographically smallest
/// assignment. Throws SizeLimitError when m^n exceeds the configured limit.
SolveResult optimal_bruteforce(const Instance& instance, const EnumerationLimits& limits = {});

/// Depth-first branch-and-bound over jobs ordered by largest nominal plus
/// deviation. Prunes on the incumbent via the current worst-case load and a
/// single-job placement lower bound, and breaks machine symmetry on
/// identical machines (a job may open a new machine only when all previous
/// ones are in use). Returns the same value as optimal_bruteforce.
SolveResult optimal_bnb(const Instance& instance);

}  // namespace robsched::exact
