#include "robsched/exact/solvers.hpp"

#include "robsched/errors.hpp"
#include "robsched/objective.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace robsched::exact {

namespace {

// Incremental per-machine view: nominal load plus deviations kept sorted
// descending, so the worst-case load is a prefix sum away.
struct MachineState {
  Value nominal;
  std::vector<Value> deviations;
  int job_count = 0;

  void add(const Value& nom, const Value& dev) {
    nominal += nom;
    deviations.insert(std::upper_bound(deviations.begin(), deviations.end(), dev,
                                       [](const Value& a, const Value& b) { return a > b; }),
                      dev);
    ++job_count;
  }

  void remove(const Value& nom, const Value& dev) {
    nominal = nominal.minus(nom);
    auto it = std::find(deviations.begin(), deviations.end(), dev);
    deviations.erase(it);
    --job_count;
  }

  Value load(int gamma) const {
    Value total = nominal;
    const int take = std::min<int>(gamma, static_cast<int>(deviations.size()));
    for (int k = 0; k < take; ++k) total += deviations[k];
    return total;
  }

  Value load_if_added(const Value& nom, const Value& dev, int gamma) const {
    Value total = nominal + nom;
    int taken = 0;
    bool candidate_used = false;
    for (std::size_t k = 0; taken < gamma && k < deviations.size(); ++k) {
      if (!candidate_used && dev >= deviations[k]) {
        total += dev;
        candidate_used = true;
        ++taken;
        if (taken == gamma) break;
      }
      total += deviations[k];
      ++taken;
    }
    if (!candidate_used && taken < gamma) total += dev;
    return total;
  }
};

struct JobView {
  std::vector<int> order;                  // jobs, largest first
  std::vector<std::vector<int>> allowed;   // allowed machines per job
};

JobView job_view(const Instance& inst) {
  const int n = inst.job_count();
  const int m = inst.machine_count();
  JobView view;
  view.allowed.resize(n);
  std::vector<Value> weight(n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < m; ++i) {
      if (inst.is_forbidden(i, j)) continue;
      view.allowed[j].push_back(i);
      Value w = inst.nominal_time(i, j) + inst.deviation_time(i, j);
      if (w > weight[j]) weight[j] = w;
    }
  }
  view.order.resize(n);
  for (int j = 0; j < n; ++j) view.order[j] = j;
  std::stable_sort(view.order.begin(), view.order.end(),
                   [&](int a, int b) { return weight[a] > weight[b]; });
  return view;
}

}  // namespace

Schedule greedy_schedule(const Instance& inst) {
  const int m = inst.machine_count();
  JobView view = job_view(inst);
  std::vector<MachineState> machines(m);
  Schedule schedule;
  schedule.assignment.assign(inst.job_count(), -1);
  for (int j : view.order) {
    int best_machine = -1;
    Value best_load;
    for (int i : view.allowed[j]) {
      Value load =
          machines[i].load_if_added(inst.nominal_time(i, j), inst.deviation_time(i, j), inst.gamma());
      if (best_machine < 0 || load < best_load) {
        best_machine = i;
        best_load = load;
      }
    }
    machines[best_machine].add(inst.nominal_time(best_machine, j),
                               inst.deviation_time(best_machine, j));
    schedule.assignment[j] = best_machine;
  }
  return schedule;
}

SolveResult optimal_bruteforce(const Instance& inst, const EnumerationLimits& limits) {
  const int n = inst.job_count();
  const int m = inst.machine_count();
  std::uint64_t total = 1;
  for (int j = 0; j < n; ++j) {
    if (total > limits.max_assignments / static_cast<std::uint64_t>(m))
      throw SizeLimitError("brute force would enumerate more than " +
                           std::to_string(limits.max_assignments) + " assignments");
    total *= static_cast<std::uint64_t>(m);
  }

  std::vector<std::vector<int>> groups(m);
  Schedule current;
  current.assignment.assign(n, -1);
  Schedule best;
  Value best_value;
  bool has_best = false;

  auto evaluate = [&]() {
    Value makespan;
    for (int i = 0; i < m; ++i) {
      Value load = worst_case_load(inst, i, groups[i]);
      if (load > makespan) makespan = load;
    }
    return makespan;
  };

  // Lexicographic enumeration over the assignment array; the first strict
  // improvement wins, so ties resolve to the smallest assignment.
  auto recurse = [&](auto&& self, int job) -> void {
    if (job == n) {
      Value value = evaluate();
      if (!has_best || value < best_value) {
        best = current;
        best_value = value;
        has_best = true;
      }
      return;
    }
    for (int i = 0; i < m; ++i) {
      if (inst.is_forbidden(i, job)) continue;
      groups[i].push_back(job);
      current.assignment[job] = i;
      self(self, job + 1);
      groups[i].pop_back();
      current.assignment[job] = -1;
    }
  };
  recurse(recurse, 0);

  if (!has_best) throw std::logic_error("no feasible assignment exists");
  return {best, best_value};
}

SolveResult optimal_bnb(const Instance& inst) {
  const int n = inst.job_count();
  const int m = inst.machine_count();
  const int gamma = inst.gamma();
  const bool identical = inst.kind() == MachineKind::Identical;
  JobView view = job_view(inst);

  Schedule best = greedy_schedule(inst);
  Value best_value = worst_case_makespan(inst, best);

  std::vector<MachineState> machines(m);
  std::vector<int> assignment(n, -1);

  // Admissible lower bound: the worst current load, and for every unassigned
  // job the load of its cheapest placement (that job has to land somewhere,
  // and loads only grow as more jobs arrive).
  auto lower_bound = [&](int depth) {
    Value bound;
    for (int i = 0; i < m; ++i) {
      Value load = machines[i].load(gamma);
      if (load > bound) bound = load;
    }
    for (int k = depth; k < n; ++k) {
      if (bound >= best_value) break;
      int j = view.order[k];
      Value cheapest = Value::forbidden();
      for (int i : view.allowed[j]) {
        Value load =
            machines[i].load_if_added(inst.nominal_time(i, j), inst.deviation_time(i, j), gamma);
        if (load < cheapest) cheapest = load;
      }
      if (cheapest > bound) bound = cheapest;
    }
    return bound;
  };

  auto recurse = [&](auto&& self, int depth) -> void {
    Value bound = lower_bound(depth);
    if (bound >= best_value) return;
    if (depth == n) {
      best.assignment = assignment;
      best_value = bound;
      return;
    }
    int j = view.order[depth];
    for (int i : view.allowed[j]) {
      if (identical && i > 0 && machines[i - 1].job_count == 0) break;
      machines[i].add(inst.nominal_time(i, j), inst.deviation_time(i, j));
      assignment[j] = i;
      self(self, depth + 1);
      assignment[j] = -1;
      machines[i].remove(inst.nominal_time(i, j), inst.deviation_time(i, j));
    }
  };
  recurse(recurse, 0);

  return {best, best_value};
}

}  // namespace robsched::exact
