#include "doctest.h"

#include "robsched/objective.hpp"
#include "support/helpers.hpp"

#include <algorithm>

using namespace robsched;
using namespace robsched::testsupport;

TEST_SUITE_BEGIN("core");

TEST_CASE("gamma_set picks the largest deviations") {
  // jobs with deviations (3, 1, 2), budget 2
  Instance inst = identical_instance(1, 2, {{val(1), val(3)}, {val(1), val(1)}, {val(1), val(2)}});
  std::vector<int> jobs{0, 1, 2};
  CHECK(gamma_set(inst, 0, jobs) == std::vector<int>{0, 2});
}

TEST_CASE("gamma_set returns everything under a large budget") {
  Instance inst = identical_instance(1, 5, {{val(1), val(2)}, {val(1), val(1)}});
  std::vector<int> jobs{0, 1};
  CHECK(gamma_set(inst, 0, jobs) == std::vector<int>{0, 1});
}

TEST_CASE("gamma_set breaks ties towards the lower index") {
  Instance inst = identical_instance(1, 1, {{val(1), val(2)}, {val(1), val(2)}});
  std::vector<int> jobs{0, 1};
  CHECK(gamma_set(inst, 0, jobs) == std::vector<int>{0});
}

TEST_CASE("gamma_set rejects bad machines and forbidden jobs") {
  Instance inst = identical_instance(2, 1, {{val(1), val(1)}});
  std::vector<int> jobs{0};
  CHECK_THROWS_AS(gamma_set(inst, 5, jobs), std::out_of_range);

  Instance unrel = Instance::unrelated(
      1, {{Value::forbidden(), val(1)}, {val(1), val(1)}},
      {{Value::forbidden(), val(0)}, {val(0), val(0)}});
  CHECK_THROWS_AS(gamma_set(unrel, 0, jobs), std::invalid_argument);
}

TEST_CASE("worst_case_load charges nominal plus the top deviations") {
  Instance inst = identical_instance(1, 2, {{val(1), val(3)}, {val(2), val(1)}, {val(1), val(2)}});
  std::vector<int> jobs{0, 1, 2};
  CHECK(worst_case_load(inst, 0, jobs) == val(9));  // 4 + (3 + 2)

  Instance classical = identical_instance(1, 0, {{val(1), val(3)}, {val(2), val(1)}, {val(1), val(2)}});
  CHECK(worst_case_load(classical, 0, jobs) == val(4));

  Instance single = identical_instance(1, 2, {{val(1), val(3)}});
  std::vector<int> one{0};
  CHECK(worst_case_load(single, 0, one) == val(4));
}

TEST_CASE("worst_case_load is forbidden when a job cannot run") {
  Instance inst = Instance::unrelated(1, {{Value::forbidden(), val(1)}, {val(2), val(2)}},
                                      {{val(0), val(0)}, {val(0), val(0)}});
  std::vector<int> jobs{0, 1};
  CHECK(worst_case_load(inst, 0, jobs).is_forbidden());
  CHECK(worst_case_load(inst, 1, jobs) == val(4));
}

TEST_CASE("worst_case_makespan maximizes over machines") {
  Instance inst = identical_instance(2, 1, {{val(1), val(1)}, {val(1), val(1)}});
  CHECK(worst_case_makespan(inst, Schedule{{0, 1}}) == val(2));
  // everything on one machine: the other machine contributes an empty load
  Instance three = identical_instance(2, 2, {{val(1), val(3)}, {val(2), val(1)}, {val(1), val(2)}});
  Schedule all_on_zero{{0, 0, 0}};
  std::vector<int> jobs{0, 1, 2};
  CHECK(worst_case_makespan(three, all_on_zero) == worst_case_load(three, 0, jobs));
}

TEST_CASE("scenario_makespan matches the chosen deviations") {
  Instance inst = identical_instance(1, 1, {{val(1), val(3)}, {val(2), val(1)}});
  Schedule schedule{{0, 0}};
  CHECK(scenario_makespan(inst, schedule, Scenario{{}}) == val(3));   // nominal only
  CHECK(scenario_makespan(inst, schedule, Scenario{{0}}) == val(6));  // 1+3+2
  CHECK_THROWS_AS(scenario_makespan(inst, schedule, Scenario{{0, 1}}), std::invalid_argument);

  Instance big_budget = identical_instance(2, 5, {{val(1), val(3)}, {val(2), val(1)}});
  Schedule split{{0, 1}};
  CHECK(scenario_makespan(big_budget, split, Scenario{{0, 1}}) == val(4));
  CHECK(worst_case_makespan(big_budget, split) == val(4));
}

TEST_CASE("validate reports the first violation") {
  Instance inst = Instance::unrelated(1, {{val(1), Value::forbidden()}, {val(1), val(1)}},
                                      {{val(0), val(0)}, {val(0), val(0)}});
  CHECK(!validate(inst, Schedule{{0, 1}}).has_value());
  auto forbidden = validate(inst, Schedule{{0, 0}});
  REQUIRE(forbidden.has_value());
  CHECK(forbidden->find("job 1") != std::string::npos);
  CHECK(forbidden->find("machine 0") != std::string::npos);
  auto short_schedule = validate(inst, Schedule{{0}});
  REQUIRE(short_schedule.has_value());
  CHECK(short_schedule->find("length") != std::string::npos);
  CHECK(validate(inst, Schedule{{0, 7}}).has_value());
}

TEST_CASE("worst_case_makespan equals the scenario-enumeration oracle") {
  std::mt19937_64 rng(20250810);
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    Instance inst = random_instance(seed);
    Schedule schedule = random_schedule(inst, rng);
    CHECK(worst_case_makespan(inst, schedule) == oracle_worst_case(inst, schedule));
  }
}

TEST_CASE("worst-case makespan is monotone in the deviation budget") {
  std::mt19937_64 rng(7);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Instance base = random_identical_instance(seed);
    Schedule schedule = random_schedule(base, rng);
    Value previous;
    for (int gamma = 0; gamma <= base.job_count() + 1; ++gamma) {
      Instance inst = Instance::identical(base.machine_count(), gamma, base.job_times());
      Value current = worst_case_makespan(inst, schedule);
      CHECK(current >= previous);
      previous = current;
    }
  }
}

TEST_CASE("budget extremes reduce to classical makespans") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Instance base = random_identical_instance(seed);
    std::mt19937_64 rng(seed);
    Schedule schedule = random_schedule(base, rng);

    Instance no_budget = Instance::identical(base.machine_count(), 0, base.job_times());
    Value nominal_only = worst_case_makespan(no_budget, schedule);
    CHECK(nominal_only == scenario_makespan(no_budget, schedule, Scenario{{}}));

    Instance full_budget =
        Instance::identical(base.machine_count(), base.job_count(), base.job_times());
    std::vector<int> everyone(base.job_count());
    for (int j = 0; j < base.job_count(); ++j) everyone[j] = j;
    CHECK(worst_case_makespan(full_budget, schedule) ==
          scenario_makespan(full_budget, schedule, Scenario{everyone}));
  }
}

TEST_CASE("gamma_set size and dominance properties") {
  std::mt19937_64 rng(99);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Instance inst = random_instance(seed);
    Schedule schedule = random_schedule(inst, rng);
    auto groups = jobs_by_machine(inst, schedule);
    for (int i = 0; i < inst.machine_count(); ++i) {
      auto picked = gamma_set(inst, i, groups[i]);
      CHECK(static_cast<int>(picked.size()) ==
            std::min<int>(static_cast<int>(groups[i].size()), inst.gamma()));
      Value smallest_in = Value::forbidden();
      for (int j : picked) {
        Value d = inst.deviation_time(i, j);
        if (d < smallest_in) smallest_in = d;
      }
      for (int j : groups[i]) {
        if (std::find(picked.begin(), picked.end(), j) != picked.end()) continue;
        CHECK(inst.deviation_time(i, j) <= smallest_in);
      }
    }
  }
}

TEST_CASE("any tie-breaking rule gives the same worst-case load") {
  // Reverse tie-break (larger index wins) must produce the same load value.
  Instance inst = identical_instance(1, 2, {{val(1), val(2)}, {val(0), val(2)}, {val(3), val(2)}});
  std::vector<int> jobs{0, 1, 2};
  std::vector<int> reversed{2, 1, 0};
  std::stable_sort(reversed.begin(), reversed.end(), [&](int a, int b) {
    return inst.deviation_time(0, a) > inst.deviation_time(0, b);
  });
  Value alt = val(1) + val(0) + val(3);  // nominal sum
  for (int k = 0; k < 2; ++k) alt += inst.deviation_time(0, reversed[k]);
  CHECK(worst_case_load(inst, 0, jobs) == alt);
}

TEST_CASE("evaluation is deterministic") {
  Instance inst = random_instance(5);
  std::mt19937_64 rng(5);
  Schedule schedule = random_schedule(inst, rng);
  CHECK(worst_case_makespan(inst, schedule) == worst_case_makespan(inst, schedule));
}

TEST_SUITE_END();
