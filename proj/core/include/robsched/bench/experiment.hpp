#pragma once

#include "robsched/bench/generator.hpp"
#include "robsched/instance.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace robsched::bench {

/// Which solver to run and with which parameters. `algo` is one of
/// "exact", "bnb", "approx3", "ptas", "eptas"; `subroutine` selects the
/// classical engine behind approx3 ("exact" or "list" on identical
/// machines).
struct SolverSpec {
  std::string algo = "bnb";
  Rational epsilon{1, 5};
  Rational delta{1, 100};
  std::string subroutine = "exact";

  std::string label() const;
};

struct ExperimentRecord {
  std::string instance_id;
  std::string family;
  int n = 0, m = 0, gamma = 0;
  std::string solver;
  std::string status;  // "ok", "limit-exceeded", "unsupported", "error: ..."
  std::optional<Value> value;     // re-evaluated from the returned schedule
  std::optional<Value> opt;       // oracle optimum, when requested
  std::optional<Rational> ratio;  // value / opt, when both are present and opt > 0
  std::optional<Rational> epsilon, delta;
  double wall_ms = 0.0;
};

struct SuiteOptions {
  bool with_oracle = true;
  /// 0 = use ROBUST_SCHED_THREADS, falling back to the hardware count.
  int threads = 0;
};

/// Runs every (config, solver) pair, re-evaluating every reported value from
/// the returned schedule. Solver failures become records with a non-"ok"
/// status; the suite keeps going. Records come back sorted by (instance_id,
/// solver), independent of the thread count.
std::vector<ExperimentRecord> run_suite(const std::vector<GeneratorConfig>& configs,
                                        const std::vector<SolverSpec>& solvers,
                                        const SuiteOptions& options = {});

/// Fixed column set:
/// instance_id,family,n,m,gamma,solver,status,value,value_approx,opt,
/// opt_approx,ratio_approx,epsilon,delta,wall_ms
/// Rationals appear exactly ("num/den"); *_approx columns are decimal.
void write_csv(std::ostream& out, const std::vector<ExperimentRecord>& records);

void write_json(std::ostream& out, const std::vector<ExperimentRecord>& records);

/// Parsed "suite file": instance blocks expanded into per-seed configs plus
/// the solver list. See the README for the JSON schema.
struct SuiteSpec {
  std::vector<GeneratorConfig> configs;
  std::vector<SolverSpec> solvers;
  bool oracle = true;
};

SuiteSpec parse_suite(std::string_view json_text);

}  // namespace robsched::bench
