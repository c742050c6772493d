#pragma once

#include "robsched/reduction/classical.hpp"

#include <memory>
#include <optional>
#include <string_view>

namespace robsched::reduction {

/// Threshold subroutine contract for classical makespan instances: given a
/// threshold T, either return a schedule with makespan at most guarantee()*T
/// or certify (by returning nothing) that no schedule has makespan at most T.
class CmaxSubroutine {
public:
  virtual ~CmaxSubroutine() = default;
  virtual std::string_view name() const = 0;
  virtual Rational guarantee() const = 0;
  virtual std::optional<Schedule> run(const ClassicalInstance& instance,
                                      const Value& threshold) const = 0;
};

/// Exact decision (guarantee factor 1) backed by the capacitated typed
/// search; machines with equal processing rows are grouped into one type so
/// identical machines are searched without symmetric duplicates.
class ExactCmaxSubroutine final : public CmaxSubroutine {
public:
  std::string_view name() const override { return "exact"; }
  Rational guarantee() const override { return Rational(1); }
  std::optional<Schedule> run(const ClassicalInstance& instance,
                              const Value& threshold) const override;
};

/// Greedy least-loaded list scheduling for identical machines (guarantee
/// factor 2). Rejects with a certificate when some job exceeds T or the
/// total load exceeds m*T; otherwise the greedy schedule provably fits in
/// 2*T. Throws std::invalid_argument for non-identical instances.
class ListSchedulingSubroutine final : public CmaxSubroutine {
public:
  std::string_view name() const override { return "list"; }
  Rational guarantee() const override { return Rational(2); }
  std::optional<Schedule> run(const ClassicalInstance& instance,
                              const Value& threshold) const override;
};

}  // namespace robsched::reduction
