// Command line front end for the robust scheduling solvers.
//
// Exit codes: 0 success, 2 invalid input, 3 enumeration limit exceeded.

#include "CLI11.hpp"

#include "robsched/bench/experiment.hpp"
#include "robsched/errors.hpp"
#include "robsched/exact/scenarios.hpp"
#include "robsched/exact/solvers.hpp"
#include "robsched/hardness/reduction.hpp"
#include "robsched/hardness/sat.hpp"
#include "robsched/json_io.hpp"
#include "robsched/objective.hpp"
#include "robsched/ptas/scheme.hpp"
#include "robsched/reduction/dual_search.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace robsched;

namespace {

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

std::string pretty(const Value& value) {
  std::ostringstream out;
  out << value.str();
  if (!value.is_forbidden() && numerator(value.rational()) != 0 &&
      denominator(value.rational()) != 1)
    out << " (~" << value.approx() << ")";
  return out.str();
}

struct SolveArgs {
  std::string instance_path;
  std::string algo = "bnb";
  std::string epsilon = "1/5";
  std::string delta = "1/100";
  std::string subroutine = "exact";
  std::string output_path;
};

int run_solve(const SolveArgs& args) {
  Instance instance = load_instance(args.instance_path);
  const Rational epsilon = parse_rational(args.epsilon);
  const Rational delta = parse_rational(args.delta);

  Schedule schedule;
  if (args.algo == "exact") {
    schedule = exact::optimal_bruteforce(instance).schedule;
  } else if (args.algo == "bnb") {
    schedule = exact::optimal_bnb(instance).schedule;
  } else if (args.algo == "approx3") {
    if (args.subroutine == "list") {
      reduction::ListSchedulingSubroutine sub;
      schedule = reduction::binary_search_solve(instance, sub, delta).schedule;
    } else if (args.subroutine == "exact") {
      reduction::ExactCmaxSubroutine sub;
      schedule = reduction::binary_search_solve(instance, sub, delta).schedule;
    } else {
      throw std::invalid_argument("unknown subroutine: " + args.subroutine);
    }
  } else if (args.algo == "ptas") {
    schedule = ptas::ptas_solve(instance, epsilon, delta).schedule;
  } else if (args.algo == "eptas") {
    schedule = ptas::eptas_solve(instance, epsilon, delta).schedule;
  } else {
    throw std::invalid_argument("unknown algorithm: " + args.algo);
  }

  if (auto violation = validate(instance, schedule))
    throw std::logic_error("solver produced an invalid schedule: " + *violation);
  // Reported values always come from independent re-evaluation.
  Value value = worst_case_makespan(instance, schedule);
  std::cout << "algo: " << args.algo << '\n';
  std::cout << "worst-case makespan: " << pretty(value) << '\n';
  if (!args.output_path.empty()) {
    write_text_file(args.output_path, schedule_to_json(schedule) + "\n");
    std::cout << "schedule written to " << args.output_path << '\n';
  }
  return 0;
}

int run_evaluate(const std::string& instance_path, const std::string& schedule_path,
                 bool adversary) {
  Instance instance = load_instance(instance_path);
  Schedule schedule = load_schedule(schedule_path);
  if (auto violation = validate(instance, schedule))
    throw std::invalid_argument("invalid schedule: " + *violation);
  std::cout << "worst-case makespan: " << pretty(worst_case_makespan(instance, schedule)) << '\n';
  if (adversary) {
    auto [scenario, value] = exact::adversary_argmax(instance, schedule);
    std::cout << "worst scenario deviates jobs:";
    if (scenario.deviating.empty()) std::cout << " (none)";
    for (int j : scenario.deviating) std::cout << ' ' << j;
    std::cout << "\nscenario makespan: " << pretty(value) << '\n';
  }
  return 0;
}

int run_gen(const bench::GeneratorConfig& config, const std::string& out_path) {
  Instance instance = bench::generate(config);
  std::string text = instance_to_json(instance) + "\n";
  if (out_path.empty())
    std::cout << text;
  else
    write_text_file(out_path, text);
  return 0;
}

int run_sat_gap(const std::string& cnf_path, const std::string& out_path, bool check) {
  std::ifstream in(cnf_path);
  if (!in) throw std::invalid_argument("cannot open " + cnf_path);
  hardness::CnfFormula formula = hardness::parse_dimacs(in);
  hardness::ReductionInstance reduction = hardness::encode(formula);
  std::cout << "formula: " << formula.variable_count << " variables, " << formula.clauses.size()
            << " clauses\n";
  std::cout << "instance: " << reduction.instance.machine_count() << " machines, "
            << reduction.instance.job_count() << " jobs, budget 1\n";
  if (!out_path.empty()) {
    write_text_file(out_path, instance_to_json(reduction.instance) + "\n");
    std::cout << "instance written to " << out_path << '\n';
  }
  if (check) {
    auto assignment = hardness::sat_decide(formula);
    Value optimum = exact::optimal_bnb(reduction.instance).value;
    std::cout << "satisfiable: " << (assignment ? "yes" : "no") << '\n';
    std::cout << "optimal worst-case makespan: " << optimum.str() << '\n';
    const bool consistent = assignment ? optimum == Value(1) : optimum >= Value(2);
    std::cout << "gap check: " << (consistent ? "consistent" : "INCONSISTENT") << '\n';
    if (!consistent) return 1;
  }
  return 0;
}

int run_bench(const std::string& config_path, const std::string& csv_path,
              const std::string& json_path, int threads) {
  bench::SuiteSpec spec = bench::parse_suite(read_text_file(config_path));
  bench::SuiteOptions options;
  options.with_oracle = spec.oracle;
  options.threads = threads;
  auto records = bench::run_suite(spec.configs, spec.solvers, options);
  if (csv_path.empty()) {
    bench::write_csv(std::cout, records);
  } else {
    std::ofstream out(csv_path);
    if (!out) throw std::invalid_argument("cannot write " + csv_path);
    bench::write_csv(out, records);
    std::cout << records.size() << " records written to " << csv_path << '\n';
  }
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw std::invalid_argument("cannot write " + json_path);
    bench::write_json(out, records);
  }
  return 0;
}

// Emits two whitespace-separated numeric columns from a results CSV, ready
// for gnuplot. Rows missing either column are skipped.
int run_plot(const std::string& csv_path, const std::string& x_column,
             const std::string& y_column, const std::string& out_path) {
  std::istringstream in(read_text_file(csv_path));
  std::string header;
  if (!std::getline(in, header)) throw std::invalid_argument("empty CSV");

  auto split = [](const std::string& line) {
    std::vector<std::string> fields;
    std::size_t pos = 0;
    while (true) {
      std::size_t comma = line.find(',', pos);
      if (comma == std::string::npos) {
        fields.push_back(line.substr(pos));
        break;
      }
      fields.push_back(line.substr(pos, comma - pos));
      pos = comma + 1;
    }
    return fields;
  };

  auto columns = split(header);
  int x_index = -1;
  int y_index = -1;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c] == x_column) x_index = static_cast<int>(c);
    if (columns[c] == y_column) y_index = static_cast<int>(c);
  }
  if (x_index < 0 || y_index < 0)
    throw std::invalid_argument("columns not found; header is: " + header);

  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto fields = split(line);
    if (fields[x_index].empty() || fields[y_index].empty()) continue;
    out << fields[x_index] << ' ' << fields[y_index] << '\n';
  }
  if (out_path.empty())
    std::cout << out.str();
  else
    write_text_file(out_path, out.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"robust makespan scheduling under budgeted deviation"};
  app.require_subcommand(1);

  std::string instance_path, schedule_path, out_path;
  bool adversary = false;
  auto* evaluate = app.add_subcommand("evaluate", "evaluate a schedule's worst-case makespan");
  evaluate->add_option("--instance", instance_path, "instance JSON file")->required();
  evaluate->add_option("--schedule", schedule_path, "schedule JSON file")->required();
  evaluate->add_flag("--adversary", adversary, "also print a worst-case scenario");

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "compute a schedule");
  solve->add_option("--instance", solve_args.instance_path, "instance JSON file")->required();
  solve->add_option("--algo", solve_args.algo, "exact|bnb|approx3|ptas|eptas");
  solve->add_option("--epsilon", solve_args.epsilon, "scheme precision (rational)");
  solve->add_option("--delta", solve_args.delta, "threshold search precision (rational)");
  solve->add_option("--sub", solve_args.subroutine, "approx3 engine: exact|list");
  solve->add_option("--out", solve_args.output_path, "write the schedule JSON here");

  bench::GeneratorConfig gen_config;
  std::string gen_family = "identical-uniform-random";
  std::vector<long long> gen_n, gen_m, gen_gamma, gen_magnitude, gen_vars, gen_clauses;
  auto* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("--family", gen_family,
                  "identical-uniform-random|identical-correlated|unrelated-random|"
                  "uniform-speeds|sat-gap");
  gen->add_option("--seed", gen_config.seed, "generator seed");
  gen->add_option("--n", gen_n, "job count range lo hi")->expected(2);
  gen->add_option("--m", gen_m, "machine count range lo hi")->expected(2);
  gen->add_option("--gamma", gen_gamma, "deviation budget range lo hi")->expected(2);
  gen->add_option("--magnitude", gen_magnitude, "processing time range lo hi")->expected(2);
  gen->add_option("--sat-vars", gen_vars, "sat-gap variable range lo hi")->expected(2);
  gen->add_option("--sat-clauses", gen_clauses, "sat-gap clause range lo hi")->expected(2);
  gen->add_option("--out", out_path, "output file (stdout when omitted)");

  std::string cnf_path;
  bool gap_check = false;
  auto* sat_gap = app.add_subcommand("sat-gap", "encode a DIMACS 3-CNF formula");
  sat_gap->add_option("--cnf", cnf_path, "DIMACS CNF file")->required();
  sat_gap->add_option("--out", out_path, "write the encoded instance here");
  sat_gap->add_flag("--check", gap_check, "solve both sides and verify the gap");

  std::string bench_config, bench_csv, bench_json;
  int bench_threads = 0;
  auto* bench_cmd = app.add_subcommand("bench", "run an experiment suite");
  bench_cmd->add_option("--config", bench_config, "suite JSON file")->required();
  bench_cmd->add_option("--csv", bench_csv, "CSV output file (stdout when omitted)");
  bench_cmd->add_option("--json", bench_json, "JSON output file");
  bench_cmd->add_option("--threads", bench_threads, "worker cap (ROBUST_SCHED_THREADS otherwise)");

  std::string plot_csv, plot_x = "n", plot_y = "ratio_approx";
  auto* plot = app.add_subcommand("plot", "extract gnuplot-ready columns from a results CSV");
  plot->add_option("--csv", plot_csv, "results CSV file")->required();
  plot->add_option("--x", plot_x, "x column name");
  plot->add_option("--y", plot_y, "y column name");
  plot->add_option("--out", out_path, "output file (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (evaluate->parsed()) return run_evaluate(instance_path, schedule_path, adversary);
    if (solve->parsed()) return run_solve(solve_args);
    if (gen->parsed()) {
      gen_config.family = bench::family_from_name(gen_family);
      auto apply = [](const std::vector<long long>& range, auto& lo, auto& hi) {
        if (range.empty()) return;
        lo = static_cast<std::decay_t<decltype(lo)>>(range[0]);
        hi = static_cast<std::decay_t<decltype(hi)>>(range[1]);
      };
      apply(gen_n, gen_config.n_min, gen_config.n_max);
      apply(gen_m, gen_config.m_min, gen_config.m_max);
      apply(gen_gamma, gen_config.gamma_min, gen_config.gamma_max);
      apply(gen_magnitude, gen_config.magnitude_min, gen_config.magnitude_max);
      apply(gen_vars, gen_config.sat_variables_min, gen_config.sat_variables_max);
      apply(gen_clauses, gen_config.sat_clauses_min, gen_config.sat_clauses_max);
      return run_gen(gen_config, out_path);
    }
    if (sat_gap->parsed()) return run_sat_gap(cnf_path, out_path, gap_check);
    if (bench_cmd->parsed()) return run_bench(bench_config, bench_csv, bench_json, bench_threads);
    if (plot->parsed()) return run_plot(plot_csv, plot_x, plot_y, out_path);
  } catch (const SizeLimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
