#include "robsched/ptas/outline.hpp"

#include "robsched/objective.hpp"

#include <algorithm>
#include <stdexcept>

namespace robsched::ptas {

std::vector<Rational> outline_of(const RoundedInstance& rounded, const Schedule& schedule) {
  const Instance instance = rounded.rounded_instance();
  auto groups = jobs_by_machine(instance, schedule);
  const int gamma = rounded.gamma();
  const Rational cap = Rational(1) / gamma;

  std::vector<Rational> thresholds;
  thresholds.reserve(rounded.machine_count());
  for (int i = 0; i < rounded.machine_count(); ++i) {
    const auto& jobs = groups[i];
    if (static_cast<int>(jobs.size()) <= gamma) {
      thresholds.emplace_back(0);
      continue;
    }
    std::vector<Rational> devs;
    devs.reserve(jobs.size());
    for (int j : jobs) devs.push_back(rounded.rounded_deviation[j].rational());
    std::nth_element(devs.begin(), devs.begin() + (gamma - 1), devs.end(),
                     [](const Rational& a, const Rational& b) { return a > b; });
    Rational threshold = devs[gamma - 1];
    if (threshold > cap)
      throw std::domain_error(
          "machine threshold exceeds 1/gamma; the schedule costs more than 1 and has no outline");
    thresholds.push_back(std::move(threshold));
  }
  return thresholds;
}

Outline outline_counts(const std::vector<Rational>& thresholds, const ThresholdSet& set) {
  Outline outline;
  outline.count.assign(set.size(), 0);
  for (const Rational& t : thresholds) ++outline.count[set.index_of(t)];
  return outline;
}

RestrictedOutline restrict_outline(const Outline& outline) {
  RestrictedOutline restricted;
  restricted.count.reserve(outline.count.size());
  for (int c : outline.count) {
    if (c == 0) {
      restricted.count.push_back(0);
      continue;
    }
    int power = 1;
    while (power * 2 <= c) power *= 2;
    restricted.count.push_back(power);
  }
  return restricted;
}

void for_each_outline(int machine_count, int threshold_count,
                      const std::function<bool(const Outline&)>& visit) {
  if (machine_count < 0 || threshold_count < 1)
    throw std::invalid_argument("need non-negative machines and at least one threshold");
  Outline outline;
  outline.count.assign(threshold_count, 0);
  bool keep_going = true;
  auto recurse = [&](auto&& self, int slot, int remaining) -> void {
    if (!keep_going) return;
    if (slot == threshold_count - 1) {
      outline.count[slot] = remaining;
      keep_going = visit(outline);
      return;
    }
    for (int c = remaining; c >= 0 && keep_going; --c) {
      outline.count[slot] = c;
      self(self, slot + 1, remaining - c);
    }
  };
  recurse(recurse, 0, machine_count);
}

std::vector<Outline> enumerate_outlines(int machine_count, int threshold_count) {
  std::vector<Outline> all;
  for_each_outline(machine_count, threshold_count, [&](const Outline& o) {
    all.push_back(o);
    return true;
  });
  return all;
}

void for_each_restricted_outline(int machine_count, int threshold_count,
                                 const std::function<bool(const RestrictedOutline&)>& visit) {
  if (machine_count < 1 || threshold_count < 1)
    throw std::invalid_argument("need at least one machine and one threshold");

  std::vector<int> allowed{0, 1};
  while (allowed.back() * 2 <= machine_count) allowed.push_back(allowed.back() * 2);

  RestrictedOutline outline;
  outline.count.assign(threshold_count, 0);
  bool keep_going = true;
  auto recurse = [&](auto&& self, int slot, int sum) -> void {
    if (!keep_going) return;
    if (slot == threshold_count) {
      if (2 * sum >= machine_count) keep_going = visit(outline);
      return;
    }
    for (std::size_t idx = allowed.size(); idx-- > 0 && keep_going;) {
      int c = allowed[idx];
      if (sum + c > machine_count) continue;
      outline.count[slot] = c;
      self(self, slot + 1, sum + c);
    }
    outline.count[slot] = 0;
  };
  recurse(recurse, 0, 0);
}

std::vector<RestrictedOutline> enumerate_restricted_outlines(int machine_count,
                                                             int threshold_count) {
  std::vector<RestrictedOutline> all;
  for_each_restricted_outline(machine_count, threshold_count, [&](const RestrictedOutline& o) {
    all.push_back(o);
    return true;
  });
  return all;
}

}  // namespace robsched::ptas
