#include "doctest.h"

#include "robsched/json_io.hpp"
#include "robsched/objective.hpp"
#include "support/helpers.hpp"

using namespace robsched;
using namespace robsched::testsupport;

TEST_SUITE_BEGIN("core");

TEST_CASE("identical instance round trip") {
  const char* text = R"({
    "kind": "identical", "machines": 2, "gamma": 1,
    "jobs": [{"p_bar": "1", "p_hat": "3/2"}, {"p_bar": 2, "p_hat": 0}]
  })";
  Instance inst = instance_from_json(text);
  CHECK(inst.kind() == MachineKind::Identical);
  CHECK(inst.machine_count() == 2);
  CHECK(inst.gamma() == 1);
  CHECK(inst.job_times()[0].deviation == Value(3, 2));
  CHECK(inst.job_times()[1].nominal == Value(2));  // integer shorthand

  Instance again = instance_from_json(instance_to_json(inst));
  CHECK(instance_to_json(again) == instance_to_json(inst));
}

TEST_CASE("uniform instance carries speeds") {
  const char* text = R"({
    "kind": "uniform", "gamma": 2, "speeds": ["1", "2"],
    "jobs": [{"p_bar": "3", "p_hat": "1"}]
  })";
  Instance inst = instance_from_json(text);
  CHECK(inst.machine_count() == 2);
  CHECK(inst.nominal_time(1, 0) == Value(3, 2));
  CHECK(instance_to_json(instance_from_json(instance_to_json(inst))) == instance_to_json(inst));
}

TEST_CASE("unrelated instance uses inf for forbidden cells") {
  const char* text = R"({
    "kind": "unrelated", "gamma": 1,
    "p_bar_matrix": [["1", "inf"], ["0", "2"]],
    "p_hat_matrix": [["0", "inf"], ["1", "0"]]
  })";
  Instance inst = instance_from_json(text);
  CHECK(inst.is_forbidden(0, 1));
  CHECK(!inst.is_forbidden(1, 1));
  CHECK(inst.deviation_time(1, 0) == Value(1));
  Instance again = instance_from_json(instance_to_json(inst));
  CHECK(instance_to_json(again) == instance_to_json(inst));
}

TEST_CASE("malformed instances are rejected") {
  CHECK_THROWS_AS(instance_from_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(instance_from_json(R"({"kind": "identical", "gamma": 0, "jobs": []})"),
                  std::invalid_argument);  // missing machines
  CHECK_THROWS_AS(instance_from_json(R"({"kind": "weird", "gamma": 0})"), std::invalid_argument);
  CHECK_THROWS_AS(
      instance_from_json(
          R"({"kind": "identical", "machines": 1, "gamma": 0, "jobs": [{"p_bar": 0.5, "p_hat": 1}]})"),
      std::invalid_argument);  // floats are not exact
  CHECK_THROWS_AS(
      instance_from_json(
          R"({"kind": "identical", "machines": 2, "gamma": -1, "jobs": [{"p_bar": 1, "p_hat": 1}]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      instance_from_json(
          R"({"kind": "unrelated", "gamma": 0, "p_bar_matrix": [["inf"]], "p_hat_matrix": [["0"]]})"),
      std::invalid_argument);  // job with no machine
}

TEST_CASE("schedule round trip") {
  Schedule schedule{{0, 2, 1}};
  Schedule parsed = schedule_from_json(schedule_to_json(schedule));
  CHECK(parsed.assignment == schedule.assignment);
  CHECK_THROWS_AS(schedule_from_json(R"({"assignment": "nope"})"), std::invalid_argument);
}

TEST_CASE("generated instances survive a round trip unchanged") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    Instance inst = random_instance(seed);
    std::string text = instance_to_json(inst);
    CHECK(instance_to_json(instance_from_json(text)) == text);
  }
}

TEST_SUITE_END();
