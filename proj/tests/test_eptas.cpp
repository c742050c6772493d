#include "doctest.h"

#include "robsched/exact/solvers.hpp"
#include "robsched/objective.hpp"
#include "robsched/ptas/scheme.hpp"
#include "support/helpers.hpp"

#include <algorithm>
#include <numeric>

using namespace robsched;
using namespace robsched::testsupport;
using namespace robsched::ptas;

TEST_SUITE_BEGIN("ptas");

TEST_CASE("restriction rounds counts down to powers of two") {
  Outline outline{{0, 1, 2, 3, 5, 10}};
  RestrictedOutline restricted = restrict_outline(outline);
  CHECK(restricted.count == std::vector<int>{0, 1, 2, 2, 4, 8});
}

TEST_CASE("restricted outline entries come from the power-of-two menu") {
  const std::vector<int> menu{0, 1, 2, 4, 8};
  for (const auto& outline : enumerate_restricted_outlines(10, 3)) {
    int sum = 0;
    for (int c : outline.count) {
      CHECK(std::find(menu.begin(), menu.end(), c) != menu.end());
      sum += c;
    }
    CHECK(2 * sum >= 10);
    CHECK(sum <= 10);
  }
}

TEST_CASE("restricted outline enumeration has no duplicates") {
  auto outlines = enumerate_restricted_outlines(6, 4);
  std::vector<std::vector<int>> seen;
  for (const auto& outline : outlines) seen.push_back(outline.count);
  std::sort(seen.begin(), seen.end());
  CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
}

TEST_CASE("every cost-bounded outline appears restricted in the stream") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Instance inst = random_identical_instance(seed, 7, 4, 2);
    if (inst.gamma() < 1) continue;
    Value opt = exact::optimal_bruteforce(inst).value;
    if (opt.is_zero()) continue;
    const Rational eps(1, 5);
    RoundedInstance rounded = round_deviations(scale_to_threshold(inst, opt), eps);
    auto best = exact::optimal_bruteforce(rounded.rounded_instance());
    if (best.value > val(1)) continue;
    ThresholdSet set = threshold_set(eps, inst.gamma());
    RestrictedOutline target =
        restrict_outline(outline_counts(outline_of(rounded, best.schedule), set));

    bool found = false;
    for_each_restricted_outline(inst.machine_count(), set.size(),
                                [&](const RestrictedOutline& candidate) {
                                  found = candidate.count == target.count;
                                  return !found;
                                });
    CHECK(found);
  }
}

TEST_CASE("cloned builds add one dummy job per surplus machine") {
  Instance inst = identical_instance(10, 1, std::vector<std::pair<Value, Value>>(
                                                 4, {val(1, 10), val(1, 2)}));
  RoundedInstance rounded = round_deviations(inst, Rational(1, 5));
  ThresholdSet set = threshold_set(Rational(1, 5), 1);

  RestrictedOutline six{std::vector<int>(set.size(), 0)};
  six.count[0] = 4;
  six.count[1] = 2;  // restricted total 6 of 10 machines
  TypedBuild build = build_capacitated_eptas(rounded, set, six);
  CHECK(build.cti.job_count - build.regular_job_count == 2);  // 2*6 - 10
  CHECK(build.cti.types.size() == 4);                         // original + clone per threshold
  CHECK(build.cti.total_machines() == 12);

  // Dummies cannot run on originals and exactly fill a clone.
  for (std::size_t t = 0; t < build.cti.types.size(); t += 2) {
    for (int d = build.regular_job_count; d < build.cti.job_count; ++d) {
      CHECK(build.cti.types[t].processing[d].is_forbidden());
      CHECK(build.cti.types[t + 1].processing[d] == build.cti.types[t + 1].capacity);
    }
  }
}

TEST_CASE("dummy counts hit both boundaries") {
  Instance inst = identical_instance(8, 1, std::vector<std::pair<Value, Value>>(
                                               3, {val(1, 10), val(1, 2)}));
  RoundedInstance rounded = round_deviations(inst, Rational(1, 5));
  ThresholdSet set = threshold_set(Rational(1, 5), 1);

  RestrictedOutline half{std::vector<int>(set.size(), 0)};
  half.count[0] = 4;  // restricted total m/2: no dummies at all
  CHECK(build_capacitated_eptas(rounded, set, half).cti.job_count ==
        build_capacitated_eptas(rounded, set, half).regular_job_count);

  RestrictedOutline full{std::vector<int>(set.size(), 0)};
  full.count[0] = 8;  // restricted total m: one dummy per clone
  TypedBuild build = build_capacitated_eptas(rounded, set, full);
  CHECK(build.cti.job_count - build.regular_job_count == 8);
  int clones = 0;
  for (int machine = 0; machine < build.cti.total_machines(); ++machine)
    clones += build.machine_is_clone[machine] ? 1 : 0;
  CHECK(clones == 8);
}

TEST_CASE("normalization drops dummy machines and lifts the rest") {
  // Two machines, restricted outline covering both, no dummies: pure lift.
  Instance two = identical_instance(2, 1, {{val(1, 4), val(1, 2)}, {val(1, 4), val(1, 2)}});
  RoundedInstance rounded = round_deviations(two, Rational(1, 5));
  ThresholdSet set = threshold_set(Rational(1, 5), 1);
  RestrictedOutline one{std::vector<int>(set.size(), 0)};
  one.count[0] = 1;  // total 1 of 2 machines: 0 dummies
  TypedBuild build = build_capacitated_eptas(rounded, set, one);
  CHECK(build.cti.job_count == build.regular_job_count);

  auto outcome = exact::capacity_decision_exact(build.cti);
  REQUIRE(outcome.accepted());
  Schedule lifted = normalize_and_lift(*outcome.schedule, build, Rational(1, 5));
  CHECK(static_cast<int>(lifted.assignment.size()) == 2);
  for (int machine : lifted.assignment) {
    CHECK(machine >= 0);
    CHECK(machine < 2);
  }
}

TEST_CASE("normalization keeps moved loads within the doubled slack") {
  const Rational eps(1, 5);
  int accepted_runs = 0;
  int dummy_runs = 0;
  for (std::uint64_t seed = 0; seed < 50 && accepted_runs < 20; ++seed) {
    Instance inst = random_identical_instance(seed, 7, 3, 2);
    if (inst.gamma() < 1) continue;
    Value opt = exact::optimal_bruteforce(inst).value;
    if (opt.is_zero()) continue;

    SchemeTrace trace;
    auto schedule = eptas_dual_step(inst, opt, eps, exact_capacity_decider(), &trace);
    REQUIRE(schedule.has_value());
    REQUIRE(trace.accepted);
    ++accepted_runs;
    if (trace.build.cti.job_count > trace.build.regular_job_count) ++dummy_runs;

    // The accepted typed schedule obeys the plain capacities; after
    // normalization every surviving machine stays within (1+2*eps).
    auto loads = exact::machine_loads(trace.build.cti, trace.typed_schedule);
    for (int machine = 0; machine < trace.build.cti.total_machines(); ++machine)
      CHECK(loads[machine] <= trace.build.capacity_of_machine(machine));

    Schedule again = normalize_and_lift(trace.typed_schedule, trace.build, eps);
    CHECK(again.assignment == trace.lifted.assignment);
  }
  CHECK(accepted_runs >= 20);
  CHECK(dummy_runs >= 1);  // the dummy-clearing path must actually run
}

TEST_CASE("normalization rejects schedules that violate the load contract") {
  Instance inst = identical_instance(2, 1, {{val(1, 2), val(1, 4)}, {val(1, 2), val(1, 4)}});
  RoundedInstance rounded = round_deviations(inst, Rational(1, 5));
  ThresholdSet set = threshold_set(Rational(1, 5), 1);
  RestrictedOutline outline{std::vector<int>(set.size(), 0)};
  outline.count[0] = 2;  // 2 originals + 2 clones, 2 dummies
  TypedBuild build = build_capacitated_eptas(rounded, set, outline);
  REQUIRE(build.cti.job_count == 4);

  // Both regular jobs and a dummy piled onto one clone: far over capacity.
  Schedule overloaded{{2, 2, 2, 3}};
  CHECK_THROWS_AS(normalize_and_lift(overloaded, build, Rational(1, 5)), std::invalid_argument);

  // A dummy parked on an original machine is equally invalid.
  Schedule dummy_on_original{{2, 3, 0, 1}};
  CHECK_THROWS_AS(normalize_and_lift(dummy_on_original, build, Rational(1, 5)),
                  std::invalid_argument);
}

TEST_CASE("restricted dual step accepts at the optimum within its factor") {
  const Rational eps(1, 5);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Instance inst = random_identical_instance(seed, 7, 3, 3);
    Value opt = exact::optimal_bruteforce(inst).value;
    if (opt.is_zero()) continue;
    auto schedule = eptas_dual_step(inst, opt, eps);
    REQUIRE(schedule.has_value());
    CHECK(worst_case_makespan(inst, *schedule) <= opt.scaled_by(eptas_accept_factor(eps)));
  }
}

TEST_CASE("restricted and plain dual steps agree on accepts at workable thresholds") {
  const Rational eps(1, 5);
  std::mt19937_64 rng(17);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Instance inst = random_identical_instance(seed, 6, 3, 2);
    Value opt = exact::optimal_bruteforce(inst).value;
    if (opt.is_zero()) continue;
    // At or above the optimum both must accept; far below both must reject.
    CHECK(ptas_dual_step(inst, opt, eps).has_value());
    CHECK(eptas_dual_step(inst, opt, eps).has_value());
    Value far_below = opt.divided_by(Rational(4));
    if (!far_below.is_zero()) {
      CHECK(!ptas_dual_step(inst, far_below, eps).has_value());
      CHECK(!eptas_dual_step(inst, far_below, eps).has_value());
    }
  }
}

TEST_CASE("power-of-two machine counts admit the all-zero-threshold outline") {
  Instance inst = identical_instance(4, 2, std::vector<std::pair<Value, Value>>(
                                               4, {val(1), val(1)}));
  Value opt = exact::optimal_bruteforce(inst).value;  // one job per machine
  SchemeTrace trace;
  auto schedule = eptas_dual_step(inst, opt, Rational(1, 5), exact_capacity_decider(), &trace);
  REQUIRE(schedule.has_value());
  CHECK(trace.accepted_counts[0] == 4);
  CHECK(std::accumulate(trace.accepted_counts.begin(), trace.accepted_counts.end(), 0) == 4);
}

TEST_CASE("full budgets with large deviations reduce to inflated classical solving") {
  Instance inst = identical_instance(2, 5, {{val(1), val(4)}, {val(2), val(3)}, {val(1), val(5)}});
  Instance inflated = identical_instance(2, 0, {{val(5), val(0)}, {val(5), val(0)}, {val(6), val(0)}});
  Value classical_opt = exact::optimal_bruteforce(inflated).value;
  CHECK(exact::optimal_bruteforce(inst).value == classical_opt);
  auto schedule = eptas_dual_step(inst, classical_opt, Rational(1, 5));
  REQUIRE(schedule.has_value());
  CHECK(worst_case_makespan(inst, *schedule) <=
        classical_opt.scaled_by(eptas_accept_factor(Rational(1, 5))));
}

TEST_CASE("restricting the optimal outline keeps the derived instance feasible") {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 60 && checked < 20; ++seed) {
    Instance inst = random_identical_instance(seed, 6, 3, 2);
    if (inst.gamma() < 1) continue;
    Value opt = exact::optimal_bruteforce(inst).value;
    if (opt.is_zero()) continue;
    const Rational eps(1, 5);
    RoundedInstance rounded = round_deviations(scale_to_threshold(inst, opt), eps);
    auto best = exact::optimal_bruteforce(rounded.rounded_instance());
    if (best.value > val(1)) continue;
    ++checked;
    ThresholdSet set = threshold_set(eps, inst.gamma());
    RestrictedOutline restricted =
        restrict_outline(outline_counts(outline_of(rounded, best.schedule), set));
    TypedBuild build = build_capacitated_eptas(rounded, set, restricted);
    CHECK(exact::capacity_decision_exact(build.cti).accepted());
  }
  CHECK(checked >= 15);
}

TEST_CASE("eptas_solve stays within its end-to-end guarantee") {
  const Rational eps(1, 5);
  const Rational delta(1, 100);
  const Rational bound = eptas_accept_factor(eps) * (Rational(1) + delta);
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    Instance inst = random_identical_instance(seed, 6, 3, 3);
    Value opt = exact::optimal_bruteforce(inst).value;
    auto result = eptas_solve(inst, eps, delta);
    CHECK(result.value == worst_case_makespan(inst, result.schedule));
    CHECK(result.value <= opt.scaled_by(bound));
  }
}

TEST_SUITE_END();
