#include "robsched/exact/capacity.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace robsched::exact {

int CapacitatedTypedInstance::total_machines() const {
  int total = 0;
  for (const auto& type : types) total += type.multiplicity;
  return total;
}

int CapacitatedTypedInstance::type_of_machine(int machine) const {
  int offset = machine;
  for (std::size_t t = 0; t < types.size(); ++t) {
    if (offset < types[t].multiplicity) return static_cast<int>(t);
    offset -= types[t].multiplicity;
  }
  throw std::out_of_range("machine index " + std::to_string(machine) + " out of range");
}

void CapacitatedTypedInstance::validate() const {
  if (types.empty()) throw std::invalid_argument("instance needs at least one machine type");
  if (job_count < 1) throw std::invalid_argument("instance needs at least one job");
  for (std::size_t t = 0; t < types.size(); ++t) {
    const auto& type = types[t];
    if (type.multiplicity < 1)
      throw std::invalid_argument("type " + std::to_string(t) + ": multiplicity must be >= 1");
    if (type.capacity.is_forbidden() || type.capacity.is_zero())
      throw std::invalid_argument("type " + std::to_string(t) + ": capacity must be finite and positive");
    if (static_cast<int>(type.processing.size()) != job_count)
      throw std::invalid_argument("type " + std::to_string(t) + ": processing row has wrong length");
  }
}

DecisionOutcome capacity_decision_exact(const CapacitatedTypedInstance& cti,
                                        const Rational& slack) {
  cti.validate();
  if (slack < 0) throw std::invalid_argument("slack must be non-negative");

  const int n = cti.job_count;
  const int k = static_cast<int>(cti.types.size());
  const int machine_count = cti.total_machines();

  std::vector<std::vector<int>> machines_of_type(k);
  {
    int machine = 0;
    for (int t = 0; t < k; ++t)
      for (int c = 0; c < cti.types[t].multiplicity; ++c) machines_of_type[t].push_back(machine++);
  }

  std::vector<std::vector<int>> allowed(n);  // types that can run each job
  std::vector<Value> weight(n);
  for (int j = 0; j < n; ++j) {
    for (int t = 0; t < k; ++t) {
      const Value& p = cti.types[t].processing[j];
      if (p.is_forbidden() || p > cti.types[t].capacity) continue;
      allowed[j].push_back(t);
      if (p > weight[j]) weight[j] = p;
    }
    if (allowed[j].empty()) return {};  // job fits nowhere: certified reject
  }

  std::vector<int> order(n);
  for (int j = 0; j < n; ++j) order[j] = j;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return weight[a] > weight[b]; });

  std::vector<Value> load(machine_count);
  std::vector<int> assignment(n, -1);

  // Every unassigned job must still fit on the emptiest machine of some
  // type it is allowed on.
  auto stuck = [&](int depth) {
    std::vector<Value> max_free(k);
    for (int t = 0; t < k; ++t) {
      Value best;
      bool first = true;
      for (int machine : machines_of_type[t]) {
        Value free = cti.types[t].capacity.minus(load[machine]);
        if (first || free > best) {
          best = free;
          first = false;
        }
      }
      max_free[t] = best;
    }
    for (int idx = depth; idx < n; ++idx) {
      int j = order[idx];
      bool fits = false;
      for (int t : allowed[j]) {
        if (cti.types[t].processing[j] <= max_free[t]) {
          fits = true;
          break;
        }
      }
      if (!fits) return true;
    }
    return false;
  };

  auto recurse = [&](auto&& self, int depth) -> bool {
    if (depth == n) return true;
    if (stuck(depth)) return false;
    int j = order[depth];
    for (int t : allowed[j]) {
      const Value& p = cti.types[t].processing[j];
      std::vector<const Value*> seen;  // equal-load machines of a type are interchangeable
      for (int machine : machines_of_type[t]) {
        bool duplicate = false;
        for (const Value* s : seen) {
          if (*s == load[machine]) {
            duplicate = true;
            break;
          }
        }
        if (duplicate) continue;
        seen.push_back(&load[machine]);
        if (load[machine] + p > cti.types[t].capacity) continue;
        load[machine] += p;
        assignment[j] = machine;
        if (self(self, depth + 1)) return true;
        assignment[j] = -1;
        load[machine] = load[machine].minus(p);
      }
    }
    return false;
  };

  if (!recurse(recurse, 0)) return {};

  Schedule schedule{assignment};
  auto loads = machine_loads(cti, schedule);
  for (int machine = 0; machine < machine_count; ++machine) {
    if (loads[machine] > cti.types[cti.type_of_machine(machine)].capacity)
      throw std::logic_error("capacity search produced an overloaded machine");
  }
  return {std::move(schedule)};
}

std::vector<Value> machine_loads(const CapacitatedTypedInstance& cti, const Schedule& schedule) {
  cti.validate();
  if (static_cast<int>(schedule.assignment.size()) != cti.job_count)
    throw std::invalid_argument("schedule length does not match job count");
  const int machine_count = cti.total_machines();
  std::vector<Value> load(machine_count);
  for (int j = 0; j < cti.job_count; ++j) {
    int machine = schedule.assignment[j];
    if (machine < 0 || machine >= machine_count)
      throw std::invalid_argument("job " + std::to_string(j) + " assigned to nonexistent machine");
    const Value& p = cti.types[cti.type_of_machine(machine)].processing[j];
    if (p.is_forbidden())
      throw std::invalid_argument("job " + std::to_string(j) + " placed on a forbidden type");
    load[machine] += p;
  }
  return load;
}

}  // namespace robsched::exact
