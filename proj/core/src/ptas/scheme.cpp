#include "robsched/ptas/scheme.hpp"

#include "robsched/objective.hpp"

#include <stdexcept>

namespace robsched::ptas {

CapacityDecider exact_capacity_decider() {
  return [](const exact::CapacitatedTypedInstance& cti, const Rational& slack) {
    return exact::capacity_decision_exact(cti, slack);
  };
}

Rational ptas_accept_factor(const Rational& epsilon) { return Rational(1) + epsilon * 5; }

Rational eptas_accept_factor(const Rational& epsilon) {
  const Rational one_plus_two = Rational(1) + epsilon * 2;
  return (Rational(1) + epsilon) * one_plus_two * one_plus_two + epsilon;
}

namespace {

Rational clamp_epsilon(const Rational& epsilon) {
  if (epsilon <= 0) throw std::domain_error("epsilon must be positive");
  return epsilon > max_epsilon() ? max_epsilon() : epsilon;
}

void check_inputs(const Instance& instance, const Value& threshold) {
  if (instance.kind() != MachineKind::Identical)
    throw std::invalid_argument("the scheme handles identical machines only");
  if (threshold.is_forbidden() || threshold.is_zero())
    throw std::domain_error("threshold must be finite and positive");
}

/// With no budget (or no deviations) the robust objective is the classical
/// one, so decide it exactly.
std::optional<Schedule> classical_decision(const Instance& instance, const Value& threshold) {
  reduction::ClassicalInstance classical = reduction::build_classical(instance, threshold);
  return reduction::ExactCmaxSubroutine().run(classical, threshold);
}

void verify_accept(const Instance& instance, const Schedule& schedule, const Value& threshold,
                   const Rational& factor) {
  if (worst_case_makespan(instance, schedule) > threshold.scaled_by(factor))
    throw std::logic_error("capacity decider violated its contract: lifted schedule too costly");
}

}  // namespace

std::optional<Schedule> ptas_dual_step(const Instance& instance, const Value& threshold,
                                       const Rational& epsilon_in, const CapacityDecider& decider,
                                       SchemeTrace* trace) {
  check_inputs(instance, threshold);
  const Rational epsilon = clamp_epsilon(epsilon_in);
  if (instance.gamma() == 0 || instance.all_deviations_zero())
    return classical_decision(instance, threshold);

  const Instance scaled = scale_to_threshold(instance, threshold);
  const RoundedInstance rounded = round_deviations(scaled, epsilon);
  const ThresholdSet set = threshold_set(epsilon, instance.gamma());

  std::optional<Schedule> result;
  for_each_outline(instance.machine_count(), set.size(), [&](const Outline& outline) {
    if (trace) ++trace->guesses_tried;
    TypedBuild build = build_capacitated(rounded, set, outline);
    exact::DecisionOutcome outcome = decider(build.cti, epsilon);
    if (!outcome.accepted()) return true;
    // Typed machines are a relabeling of the identical real machines, so the
    // assignment lifts as-is.
    result = *outcome.schedule;
    if (trace) {
      trace->accepted = true;
      trace->accepted_counts = outline.count;
      trace->typed_schedule = *outcome.schedule;
      trace->build = std::move(build);
      trace->lifted = *result;
    }
    return false;
  });

  if (result) verify_accept(instance, *result, threshold, ptas_accept_factor(epsilon));
  return result;
}

std::optional<Schedule> eptas_dual_step(const Instance& instance, const Value& threshold,
                                        const Rational& epsilon_in, const CapacityDecider& decider,
                                        SchemeTrace* trace) {
  check_inputs(instance, threshold);
  const Rational epsilon = clamp_epsilon(epsilon_in);
  if (instance.gamma() == 0 || instance.all_deviations_zero())
    return classical_decision(instance, threshold);

  const Instance scaled = scale_to_threshold(instance, threshold);
  const RoundedInstance rounded = round_deviations(scaled, epsilon);
  const ThresholdSet set = threshold_set(epsilon, instance.gamma());

  std::optional<Schedule> result;
  for_each_restricted_outline(
      instance.machine_count(), set.size(), [&](const RestrictedOutline& outline) {
        if (trace) ++trace->guesses_tried;
        TypedBuild build = build_capacitated_eptas(rounded, set, outline);
        exact::DecisionOutcome outcome = decider(build.cti, epsilon);
        if (!outcome.accepted()) return true;
        result = normalize_and_lift(*outcome.schedule, build, epsilon);
        if (trace) {
          trace->accepted = true;
          trace->accepted_counts = outline.count;
          trace->typed_schedule = *outcome.schedule;
          trace->build = std::move(build);
          trace->lifted = *result;
        }
        return false;
      });

  if (result) verify_accept(instance, *result, threshold, eptas_accept_factor(epsilon));
  return result;
}

reduction::SearchResult ptas_solve(const Instance& instance, const Rational& epsilon,
                                   const Rational& delta) {
  return reduction::binary_search_solve(
      instance,
      [&epsilon](const Instance& inst, const Value& threshold) {
        return ptas_dual_step(inst, threshold, epsilon);
      },
      delta);
}

reduction::SearchResult eptas_solve(const Instance& instance, const Rational& epsilon,
                                    const Rational& delta) {
  return reduction::binary_search_solve(
      instance,
      [&epsilon](const Instance& inst, const Value& threshold) {
        return eptas_dual_step(inst, threshold, epsilon);
      },
      delta);
}

}  // namespace robsched::ptas
