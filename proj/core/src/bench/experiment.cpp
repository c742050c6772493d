#include "robsched/bench/experiment.hpp"

#include "robsched/errors.hpp"
#include "robsched/exact/solvers.hpp"
#include "robsched/json_io.hpp"
#include "robsched/objective.hpp"
#include "robsched/ptas/scheme.hpp"
#include "robsched/reduction/dual_search.hpp"

#include "json.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

namespace robsched::bench {

// Labels stay comma-free so the CSV needs no quoting.
std::string SolverSpec::label() const {
  if (algo == "exact" || algo == "bnb") return algo;
  std::string out = algo + "[";
  if (algo == "approx3") out += "sub=" + subroutine + ";";
  if (algo == "ptas" || algo == "eptas") out += "eps=" + rational_str(epsilon) + ";";
  out += "delta=" + rational_str(delta) + "]";
  return out;
}

namespace {

struct SolveOutcome {
  std::optional<Schedule> schedule;
  std::string status = "ok";
};

SolveOutcome run_solver(const Instance& instance, const SolverSpec& spec) {
  try {
    if (spec.algo == "exact") return {exact::optimal_bruteforce(instance).schedule, "ok"};
    if (spec.algo == "bnb") return {exact::optimal_bnb(instance).schedule, "ok"};
    if (spec.algo == "approx3") {
      if (spec.subroutine == "list") {
        if (instance.kind() != MachineKind::Identical) return {std::nullopt, "unsupported"};
        reduction::ListSchedulingSubroutine sub;
        return {reduction::binary_search_solve(instance, sub, spec.delta).schedule, "ok"};
      }
      if (spec.subroutine != "exact")
        throw std::invalid_argument("unknown subroutine: " + spec.subroutine);
      reduction::ExactCmaxSubroutine sub;
      return {reduction::binary_search_solve(instance, sub, spec.delta).schedule, "ok"};
    }
    if (spec.algo == "ptas" || spec.algo == "eptas") {
      if (instance.kind() != MachineKind::Identical) return {std::nullopt, "unsupported"};
      auto result = spec.algo == "ptas" ? ptas::ptas_solve(instance, spec.epsilon, spec.delta)
                                        : ptas::eptas_solve(instance, spec.epsilon, spec.delta);
      return {std::move(result.schedule), "ok"};
    }
    throw std::invalid_argument("unknown algorithm: " + spec.algo);
  } catch (const SizeLimitError&) {
    return {std::nullopt, "limit-exceeded"};
  } catch (const std::exception& e) {
    return {std::nullopt, std::string("error: ") + e.what()};
  }
}

std::optional<Value> oracle_optimum(const Instance& instance) {
  try {
    return exact::optimal_bruteforce(instance).value;
  } catch (const SizeLimitError&) {
  }
  if (instance.job_count() <= 24) return exact::optimal_bnb(instance).value;
  return std::nullopt;
}

int thread_count(const SuiteOptions& options, std::size_t tasks) {
  int threads = options.threads;
  if (threads <= 0) {
    if (const char* env = std::getenv("ROBUST_SCHED_THREADS")) threads = std::atoi(env);
  }
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads <= 0) threads = 1;
  return static_cast<int>(std::min<std::size_t>(threads, std::max<std::size_t>(tasks, 1)));
}

void parallel_for(int count, int threads, const std::function<void(int)>& body) {
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (int w = 0; w < threads; ++w) {
    workers.emplace_back([&]() {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
    });
  }
  for (auto& worker : workers) worker.join();
}

std::string make_instance_id(std::size_t index, const GeneratorConfig& config) {
  std::ostringstream id;
  id << 'i' << std::setw(4) << std::setfill('0') << index << '-' << family_name(config.family)
     << "-s" << config.seed;
  return id.str();
}

std::string double_str(double v) {
  std::ostringstream out;
  out << std::setprecision(10) << v;
  return out.str();
}

}  // namespace

std::vector<ExperimentRecord> run_suite(const std::vector<GeneratorConfig>& configs,
                                        const std::vector<SolverSpec>& solvers,
                                        const SuiteOptions& options) {
  std::vector<Instance> instances;
  instances.reserve(configs.size());
  for (const auto& config : configs) instances.push_back(generate(config));

  const int instance_count = static_cast<int>(instances.size());
  std::vector<std::optional<Value>> optima(instance_count);
  const int threads = thread_count(options, instances.size() * solvers.size());
  if (options.with_oracle) {
    parallel_for(instance_count, threads,
                 [&](int i) { optima[i] = oracle_optimum(instances[i]); });
  }

  const int task_count = instance_count * static_cast<int>(solvers.size());
  std::vector<ExperimentRecord> records(task_count);
  parallel_for(task_count, threads, [&](int task) {
    const int i = task / static_cast<int>(solvers.size());
    const int s = task % static_cast<int>(solvers.size());
    const Instance& instance = instances[i];
    const SolverSpec& spec = solvers[s];

    ExperimentRecord record;
    record.instance_id = make_instance_id(i, configs[i]);
    record.family = std::string(family_name(configs[i].family));
    record.n = instance.job_count();
    record.m = instance.machine_count();
    record.gamma = instance.gamma();
    record.solver = spec.label();
    if (spec.algo == "ptas" || spec.algo == "eptas") record.epsilon = spec.epsilon;
    if (spec.algo != "exact" && spec.algo != "bnb") record.delta = spec.delta;

    const auto start = std::chrono::steady_clock::now();
    SolveOutcome outcome = run_solver(instance, spec);
    record.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    record.status = outcome.status;
    if (outcome.schedule) {
      // Never trust a solver's self-reported value.
      record.value = worst_case_makespan(instance, *outcome.schedule);
      record.opt = optima[i];
      if (record.opt && !record.opt->is_forbidden() && !record.opt->is_zero() &&
          !record.value->is_forbidden())
        record.ratio = record.value->rational() / record.opt->rational();
    }
    records[task] = std::move(record);
  });

  std::stable_sort(records.begin(), records.end(),
                   [](const ExperimentRecord& a, const ExperimentRecord& b) {
                     if (a.instance_id != b.instance_id) return a.instance_id < b.instance_id;
                     return a.solver < b.solver;
                   });
  return records;
}

void write_csv(std::ostream& out, const std::vector<ExperimentRecord>& records) {
  out << "instance_id,family,n,m,gamma,solver,status,value,value_approx,opt,opt_approx,"
         "ratio_approx,epsilon,delta,wall_ms\n";
  for (const auto& r : records) {
    out << r.instance_id << ',' << r.family << ',' << r.n << ',' << r.m << ',' << r.gamma << ','
        << r.solver << ',' << r.status << ',';
    out << (r.value ? r.value->str() : "") << ',';
    out << (r.value ? double_str(r.value->approx()) : "") << ',';
    out << (r.opt ? r.opt->str() : "") << ',';
    out << (r.opt ? double_str(r.opt->approx()) : "") << ',';
    out << (r.ratio ? double_str(r.ratio->convert_to<double>()) : "") << ',';
    out << (r.epsilon ? rational_str(*r.epsilon) : "") << ',';
    out << (r.delta ? rational_str(*r.delta) : "") << ',';
    out << double_str(r.wall_ms) << '\n';
  }
}

void write_json(std::ostream& out, const std::vector<ExperimentRecord>& records) {
  nlohmann::json doc = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json entry;
    entry["instance_id"] = r.instance_id;
    entry["family"] = r.family;
    entry["n"] = r.n;
    entry["m"] = r.m;
    entry["gamma"] = r.gamma;
    entry["solver"] = r.solver;
    entry["status"] = r.status;
    if (r.value) entry["value"] = r.value->str();
    if (r.opt) entry["opt"] = r.opt->str();
    if (r.ratio) entry["ratio_approx"] = r.ratio->convert_to<double>();
    if (r.epsilon) entry["epsilon"] = rational_str(*r.epsilon);
    if (r.delta) entry["delta"] = rational_str(*r.delta);
    entry["wall_ms"] = r.wall_ms;
    doc.push_back(std::move(entry));
  }
  out << doc.dump(2) << '\n';
}

namespace {

using nlohmann::json;

[[noreturn]] void suite_fail(const std::string& what) {
  throw std::invalid_argument("suite JSON: " + what);
}

void read_range(const json& node, const char* key, auto& lo, auto& hi) {
  if (!node.contains(key)) return;
  const json& pair = node[key];
  if (!pair.is_array() || pair.size() != 2) suite_fail(std::string(key) + " must be [lo, hi]");
  lo = pair[0].get<decltype(lo + 0)>();
  hi = pair[1].get<decltype(hi + 0)>();
}

Rational rational_field(const json& node, const char* key, const Rational& fallback) {
  if (!node.contains(key)) return fallback;
  if (node[key].is_string()) return parse_rational(node[key].get<std::string>());
  if (node[key].is_number_integer()) return Rational(node[key].get<long long>());
  suite_fail(std::string(key) + " must be an integer or a \"num/den\" string");
}

}  // namespace

SuiteSpec parse_suite(std::string_view text) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) suite_fail("not a JSON object");
  if (!doc.contains("instances") || !doc["instances"].is_array()) suite_fail("missing \"instances\"");
  if (!doc.contains("solvers") || !doc["solvers"].is_array()) suite_fail("missing \"solvers\"");

  SuiteSpec spec;
  spec.oracle = doc.value("oracle", true);

  for (const auto& block : doc["instances"]) {
    if (!block.is_object() || !block.contains("family")) suite_fail("instance block needs a family");
    GeneratorConfig base;
    base.family = family_from_name(block["family"].get<std::string>());
    base.seed = block.value("seed", 1ULL);
    read_range(block, "n", base.n_min, base.n_max);
    read_range(block, "m", base.m_min, base.m_max);
    read_range(block, "gamma", base.gamma_min, base.gamma_max);
    read_range(block, "magnitude", base.magnitude_min, base.magnitude_max);
    read_range(block, "sat_vars", base.sat_variables_min, base.sat_variables_max);
    read_range(block, "sat_clauses", base.sat_clauses_min, base.sat_clauses_max);
    const long long count = block.value("count", 1LL);
    if (count < 1) suite_fail("count must be at least 1");
    for (long long k = 0; k < count; ++k) {
      GeneratorConfig config = base;
      config.seed = base.seed + static_cast<std::uint64_t>(k);
      spec.configs.push_back(config);
    }
  }

  for (const auto& block : doc["solvers"]) {
    if (!block.is_object() || !block.contains("algo")) suite_fail("solver block needs an algo");
    SolverSpec solver;
    solver.algo = block["algo"].get<std::string>();
    solver.epsilon = rational_field(block, "epsilon", solver.epsilon);
    solver.delta = rational_field(block, "delta", solver.delta);
    solver.subroutine = block.value("sub", solver.subroutine);
    spec.solvers.push_back(std::move(solver));
  }
  return spec;
}

}  // namespace robsched::bench
