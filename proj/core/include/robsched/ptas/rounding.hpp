#pragma once

#include "robsched/instance.hpp"

#include <vector>

namespace robsched::ptas {

/// Largest epsilon the scheme accepts; callers above it are clamped.
Rational max_epsilon();

/// Divides every processing time by T so the target makespan becomes 1.
/// Uniform speeds are unchanged. Requires T finite and positive.
Instance scale_to_threshold(const Instance& instance, const Value& threshold);

/// An identical-machine instance scaled to target 1, with deviations rounded
/// down onto the grid {0} u {eps/gamma * (1+eps)^i}. Deviations below
/// eps/gamma collapse to 0; the rest lose at most a (1+eps) factor.
struct RoundedInstance {
  Instance scaled;                       // the instance before rounding
  std::vector<Value> rounded_deviation;  // one entry per job, on the grid
  Rational epsilon;

  int gamma() const { return scaled.gamma(); }
  int machine_count() const { return scaled.machine_count(); }
  int job_count() const { return scaled.job_count(); }

  /// The identical instance carrying the rounded deviations.
  Instance rounded_instance() const;
};

/// Requires an identical-machine instance, eps in (0, 1) and a deviation
/// budget of at least 1.
RoundedInstance round_deviations(const Instance& scaled, const Rational& epsilon);

/// All values a machine threshold can take for cost-at-most-1 schedules:
/// {0} plus the grid points eps/gamma * (1+eps)^i up to 1/gamma, ascending.
struct ThresholdSet {
  Rational epsilon;
  int gamma = 1;
  std::vector<Rational> values;

  int size() const { return static_cast<int>(values.size()); }
  /// Index of an exact grid value; throws when absent.
  int index_of(const Rational& value) const;
};

ThresholdSet threshold_set(const Rational& epsilon, int gamma);

}  // namespace robsched::ptas
