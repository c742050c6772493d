#pragma once

#include "robsched/instance.hpp"
#include "robsched/reduction/subroutines.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace robsched::reduction {

/// One dual-approximation step at threshold T: transform the robust instance
/// into its classical counterpart and ask the subroutine. Accept returns a
/// schedule whose worst-case makespan is at most (guarantee+1)*T; a
/// rejection certifies that every schedule costs more than T.
std::optional<Schedule> dual_step(const Instance& instance, const Value& threshold,
                                  const CmaxSubroutine& subroutine);

/// Accept/reject procedure driven by the threshold search. Accepting at T
/// must come with a schedule of worst-case makespan at most factor*T for the
/// procedure's fixed factor; rejecting must certify that no schedule costs
/// at most T.
using ThresholdDecider = std::function<std::optional<Schedule>(const Instance&, const Value&)>;

struct SearchProbe {
  Value threshold;
  bool accepted = false;
};

struct SearchResult {
  Schedule schedule;
  Value value;      // independently re-evaluated worst-case makespan
  Value threshold;  // smallest threshold the search accepted
  std::vector<SearchProbe> probes;
};

/// Geometric threshold search. Probes the grid LB*(1+delta)^k between an
/// instance lower bound and a greedy upper bound by bisection on the grid
/// index, maintaining a rejected threshold below and an accepted schedule
/// above, and stops when the two are within a factor (1+delta). With a
/// decider of factor c the returned value is at most c*(1+delta)*OPT.
SearchResult binary_search_solve(const Instance& instance, const ThresholdDecider& decider,
                                 const Rational& delta);

/// Convenience overload wiring dual_step with the given subroutine.
SearchResult binary_search_solve(const Instance& instance, const CmaxSubroutine& subroutine,
                                 const Rational& delta);

/// Lower bound used by the search: for a single machine the exact full load;
/// otherwise the best single-job placement (with deviation when the budget
/// allows one) combined with the average nominal load.
Value search_lower_bound(const Instance& instance);

}  // namespace robsched::reduction
