#include "robsched/ptas/rounding.hpp"

#include <stdexcept>

namespace robsched::ptas {

Rational max_epsilon() { return Rational(1, 5); }

Instance scale_to_threshold(const Instance& instance, const Value& threshold) {
  if (threshold.is_forbidden() || threshold.is_zero())
    throw std::domain_error("scaling threshold must be finite and positive");
  const Rational& t = threshold.rational();

  switch (instance.kind()) {
    case MachineKind::Identical:
    case MachineKind::Uniform: {
      std::vector<JobTimes> jobs;
      jobs.reserve(instance.job_count());
      for (const auto& jt : instance.job_times())
        jobs.push_back({jt.nominal.divided_by(t), jt.deviation.divided_by(t)});
      if (instance.kind() == MachineKind::Identical)
        return Instance::identical(instance.machine_count(), instance.gamma(), std::move(jobs));
      return Instance::uniform(instance.speeds(), instance.gamma(), std::move(jobs));
    }
    case MachineKind::Unrelated: {
      std::vector<std::vector<Value>> nominal(instance.machine_count());
      std::vector<std::vector<Value>> deviation(instance.machine_count());
      for (int i = 0; i < instance.machine_count(); ++i) {
        for (int j = 0; j < instance.job_count(); ++j) {
          if (instance.is_forbidden(i, j)) {
            nominal[i].push_back(Value::forbidden());
            deviation[i].push_back(Value::forbidden());
          } else {
            nominal[i].push_back(instance.nominal_time(i, j).divided_by(t));
            deviation[i].push_back(instance.deviation_time(i, j).divided_by(t));
          }
        }
      }
      return Instance::unrelated(instance.gamma(), std::move(nominal), std::move(deviation));
    }
  }
  throw std::logic_error("unreachable");
}

namespace {

// The rounding grid is well defined for any epsilon below 1; the scheme
// itself clamps to max_epsilon() where its guarantee needs it.
void check_epsilon(const Rational& epsilon) {
  if (epsilon <= 0 || epsilon >= 1) throw std::domain_error("epsilon must lie in (0, 1)");
}

}  // namespace

Instance RoundedInstance::rounded_instance() const {
  std::vector<JobTimes> jobs;
  jobs.reserve(job_count());
  const auto& original = scaled.job_times();
  for (int j = 0; j < job_count(); ++j)
    jobs.push_back({original[j].nominal, rounded_deviation[j]});
  return Instance::identical(machine_count(), gamma(), std::move(jobs));
}

RoundedInstance round_deviations(const Instance& scaled, const Rational& epsilon) {
  if (scaled.kind() != MachineKind::Identical)
    throw std::invalid_argument("deviation rounding applies to identical machines only");
  check_epsilon(epsilon);
  if (scaled.gamma() < 1)
    throw std::invalid_argument("deviation rounding needs a budget of at least 1");

  const Rational floor = epsilon / scaled.gamma();
  const Rational step = Rational(1) + epsilon;

  RoundedInstance rounded{scaled, {}, epsilon};
  rounded.rounded_deviation.reserve(scaled.job_count());
  for (const auto& jt : scaled.job_times()) {
    const Rational& dev = jt.deviation.rational();
    if (dev < floor) {
      rounded.rounded_deviation.emplace_back(0);
      continue;
    }
    Rational grid = floor;
    while (grid * step <= dev) grid *= step;
    rounded.rounded_deviation.push_back(Value(grid));
  }
  return rounded;
}

int ThresholdSet::index_of(const Rational& value) const {
  for (int l = 0; l < size(); ++l)
    if (values[l] == value) return l;
  throw std::invalid_argument("value " + rational_str(value) + " is not a threshold");
}

ThresholdSet threshold_set(const Rational& epsilon, int gamma) {
  check_epsilon(epsilon);
  if (gamma < 1) throw std::invalid_argument("threshold set needs a budget of at least 1");

  ThresholdSet set{epsilon, gamma, {Rational(0)}};
  const Rational cap = Rational(1) / gamma;
  const Rational step = Rational(1) + epsilon;
  Rational grid = epsilon / gamma;
  while (grid <= cap) {
    set.values.push_back(grid);
    grid *= step;
  }
  return set;
}

}  // namespace robsched::ptas
