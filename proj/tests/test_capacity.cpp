#include "doctest.h"

#include "robsched/exact/capacity.hpp"
#include "support/helpers.hpp"

#include <random>

using namespace robsched;
using namespace robsched::testsupport;
using exact::CapacitatedTypedInstance;
using exact::MachineType;

TEST_SUITE_BEGIN("exact");

namespace {

// Independent feasibility check: enumerate every job-to-machine assignment.
bool feasible_by_enumeration(const CapacitatedTypedInstance& cti) {
  const int machines = cti.total_machines();
  const int n = cti.job_count;
  std::vector<int> assignment(n, 0);
  std::vector<Value> load(machines);
  auto recurse = [&](auto&& self, int job) -> bool {
    if (job == n) return true;
    for (int machine = 0; machine < machines; ++machine) {
      const Value& p = cti.types[cti.type_of_machine(machine)].processing[job];
      if (p.is_forbidden()) continue;
      if (load[machine] + p > cti.types[cti.type_of_machine(machine)].capacity) continue;
      load[machine] += p;
      if (self(self, job + 1)) return true;
      load[machine] = load[machine].minus(p);
    }
    return false;
  };
  return recurse(recurse, 0);
}

CapacitatedTypedInstance random_cti(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto draw = [&](long long lo, long long hi) {
    return static_cast<long long>(lo + rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  CapacitatedTypedInstance cti;
  cti.job_count = static_cast<int>(draw(1, 6));
  const int types = static_cast<int>(draw(1, 3));
  for (int t = 0; t < types; ++t) {
    MachineType type;
    type.multiplicity = static_cast<int>(draw(1, 2));
    type.capacity = Value(draw(1, 10));
    for (int j = 0; j < cti.job_count; ++j) {
      if (draw(0, 7) == 0)
        type.processing.push_back(Value::forbidden());
      else
        type.processing.push_back(Value(draw(0, 8)));
    }
    cti.types.push_back(std::move(type));
  }
  return cti;
}

}  // namespace

TEST_CASE("capacity decision accepts a feasible split") {
  CapacitatedTypedInstance cti{{{2, val(1), {val(1), val(1)}}}, 2};
  auto outcome = exact::capacity_decision_exact(cti);
  REQUIRE(outcome.accepted());
  auto loads = exact::machine_loads(cti, *outcome.schedule);
  CHECK(loads[0] == val(1));
  CHECK(loads[1] == val(1));
}

TEST_CASE("capacity decision rejects an overfull machine") {
  CapacitatedTypedInstance cti{{{1, val(1), {val(3, 5), val(3, 5)}}}, 2};
  CHECK(!exact::capacity_decision_exact(cti).accepted());
}

TEST_CASE("capacity decision rejects a job that fits nowhere") {
  CapacitatedTypedInstance cti{{{2, val(1), {Value::forbidden(), val(1)}}}, 2};
  CHECK(!exact::capacity_decision_exact(cti).accepted());
}

TEST_CASE("capacities above one are fine") {
  CapacitatedTypedInstance cti{{{1, val(6, 5), {val(1), val(1, 5)}}}, 2};
  CHECK(exact::capacity_decision_exact(cti).accepted());
}

TEST_CASE("slack must be non-negative and never loosens the exact answer") {
  CapacitatedTypedInstance cti{{{1, val(1), {val(3, 5), val(3, 5)}}}, 2};
  CHECK_THROWS_AS(exact::capacity_decision_exact(cti, Rational(-1, 2)), std::invalid_argument);
  CHECK(!exact::capacity_decision_exact(cti, Rational(1, 2)).accepted());
}

TEST_CASE("capacity decision agrees with plain enumeration") {
  for (std::uint64_t seed = 0; seed < 250; ++seed) {
    CapacitatedTypedInstance cti = random_cti(seed);
    auto outcome = exact::capacity_decision_exact(cti);
    CHECK(outcome.accepted() == feasible_by_enumeration(cti));
    if (outcome.accepted()) {
      auto loads = exact::machine_loads(cti, *outcome.schedule);
      for (int machine = 0; machine < cti.total_machines(); ++machine)
        CHECK(loads[machine] <= cti.types[cti.type_of_machine(machine)].capacity);
    }
  }
}

TEST_CASE("the outcome is invariant under scaling capacities and times together") {
  const Rational factor(7, 3);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    CapacitatedTypedInstance cti = random_cti(seed);
    CapacitatedTypedInstance scaled = cti;
    for (auto& type : scaled.types) {
      type.capacity = type.capacity.scaled_by(factor);
      for (auto& p : type.processing) p = p.scaled_by(factor);
    }
    CHECK(exact::capacity_decision_exact(cti).accepted() ==
          exact::capacity_decision_exact(scaled).accepted());
  }
}

TEST_SUITE_END();
