#pragma once

#include "robsched/ptas/capacitated.hpp"
#include "robsched/reduction/dual_search.hpp"

#include <functional>
#include <optional>

namespace robsched::ptas {

/// Capacity decision plugged into the scheme. It must accept with a schedule
/// whose loads stay within (1+slack) of the capacities whenever a schedule
/// within the plain capacities exists, and certify rejection otherwise.
using CapacityDecider =
    std::function<exact::DecisionOutcome(const exact::CapacitatedTypedInstance&, const Rational&)>;

/// The exact search as a CapacityDecider (accepts within plain capacities).
CapacityDecider exact_capacity_decider();

/// Introspection for tests and the acceptance suite: which guess was
/// accepted, the typed schedule before lifting, and the lifted schedule.
struct SchemeTrace {
  int guesses_tried = 0;
  bool accepted = false;
  std::vector<int> accepted_counts;
  Schedule typed_schedule;
  TypedBuild build;
  Schedule lifted;
};

/// Worst-case makespan factor an accepted dual step is held to, relative to
/// the threshold probed.
Rational ptas_accept_factor(const Rational& epsilon);   // 1 + 5*eps
Rational eptas_accept_factor(const Rational& epsilon);  // (1+eps)*(1+2*eps)^2 + eps

/// Dual step of the outline scheme on identical machines: scale to the
/// threshold, round deviations, and try every outline, handing each derived
/// capacitated instance to the capacity decider. The first acceptance lifts
/// back to the real machines and is verified against ptas_accept_factor;
/// rejection of every outline certifies that no schedule costs at most the
/// threshold. A zero budget or all-zero deviations short-circuit to an exact
/// classical decision.
std::optional<Schedule> ptas_dual_step(const Instance& instance, const Value& threshold,
                                       const Rational& epsilon,
                                       const CapacityDecider& decider = exact_capacity_decider(),
                                       SchemeTrace* trace = nullptr);

/// Dual step of the restricted-outline scheme: same contract as
/// ptas_dual_step but iterating the (much smaller) restricted outline space
/// with cloned machine types and dummy jobs, normalizing accepted schedules
/// back onto the real machines. Verified against eptas_accept_factor.
std::optional<Schedule> eptas_dual_step(const Instance& instance, const Value& threshold,
                                        const Rational& epsilon,
                                        const CapacityDecider& decider = exact_capacity_decider(),
                                        SchemeTrace* trace = nullptr);

/// Threshold searches wrapping the two dual steps; the returned value is
/// within factor*(1+delta) of optimal for the respective accept factor.
reduction::SearchResult ptas_solve(const Instance& instance, const Rational& epsilon,
                                   const Rational& delta);
reduction::SearchResult eptas_solve(const Instance& instance, const Rational& epsilon,
                                    const Rational& delta);

}  // namespace robsched::ptas
