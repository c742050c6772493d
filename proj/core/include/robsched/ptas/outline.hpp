#pragma once

#include "robsched/instance.hpp"
#include "robsched/ptas/rounding.hpp"

#include <functional>
#include <vector>

namespace robsched::ptas {

/// How many machines carry each threshold value; parallel to
/// ThresholdSet::values, entries sum to the machine count.
struct Outline {
  std::vector<int> count;
};

/// Outline with per-threshold counts rounded down to powers of two (or 0);
/// it only pins each true count within a factor of two, so the counts sum to
/// between half the machine count and the machine count.
struct RestrictedOutline {
  std::vector<int> count;
};

/// Per-machine thresholds of a schedule of the rounded instance. A machine
/// with at most gamma jobs gets 0, otherwise the gamma-th largest rounded
/// deviation on it. Throws when a threshold lands above 1/gamma, which only
/// happens for schedules costing more than 1.
std::vector<Rational> outline_of(const RoundedInstance& rounded, const Schedule& schedule);

/// Groups per-machine thresholds into counts over the threshold set.
Outline outline_counts(const std::vector<Rational>& thresholds, const ThresholdSet& set);

/// The power-of-two restriction of an outline, entrywise.
RestrictedOutline restrict_outline(const Outline& outline);

/// Every split of `machine_count` machines over `threshold_count` thresholds
/// exactly once; the visitor returns false to stop early. The first
/// coordinate runs from machine_count down to 0, so the all-zero-threshold
/// outline comes first.
void for_each_outline(int machine_count, int threshold_count,
                      const std::function<bool(const Outline&)>& visit);

std::vector<Outline> enumerate_outlines(int machine_count, int threshold_count);

/// Every vector over {0, 1, 2, 4, ..., 2^floor(log2 m)} whose entries sum to
/// between m/2 and m, exactly once.
void for_each_restricted_outline(int machine_count, int threshold_count,
                                 const std::function<bool(const RestrictedOutline&)>& visit);

std::vector<RestrictedOutline> enumerate_restricted_outlines(int machine_count,
                                                             int threshold_count);

}  // namespace robsched::ptas
