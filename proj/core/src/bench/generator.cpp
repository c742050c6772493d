#include "robsched/bench/generator.hpp"

#include "robsched/hardness/reduction.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace robsched::bench {

std::string_view family_name(Family family) {
  switch (family) {
    case Family::IdenticalUniformRandom: return "identical-uniform-random";
    case Family::IdenticalCorrelated: return "identical-correlated";
    case Family::UnrelatedRandom: return "unrelated-random";
    case Family::UniformSpeeds: return "uniform-speeds";
    case Family::SatGap: return "sat-gap";
  }
  return "?";
}

Family family_from_name(std::string_view name) {
  for (Family f : {Family::IdenticalUniformRandom, Family::IdenticalCorrelated,
                   Family::UnrelatedRandom, Family::UniformSpeeds, Family::SatGap}) {
    if (family_name(f) == name) return f;
  }
  throw std::invalid_argument("unknown instance family: " + std::string(name));
}

namespace {

// Deliberately not std::uniform_int_distribution: its output is
// implementation-defined and the generator promises byte-identical draws
// everywhere.
long long draw(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

void check_range(long long lo, long long hi, const char* what) {
  if (lo > hi) throw std::invalid_argument(std::string(what) + ": empty range");
}

std::vector<JobTimes> draw_jobs(std::mt19937_64& rng, int n, const GeneratorConfig& cfg) {
  std::vector<JobTimes> jobs;
  jobs.reserve(n);
  for (int j = 0; j < n; ++j) {
    Value nominal(draw(rng, cfg.magnitude_min, cfg.magnitude_max));
    Value deviation(draw(rng, cfg.magnitude_min, cfg.magnitude_max));
    jobs.push_back({nominal, deviation});
  }
  return jobs;
}

}  // namespace

Instance generate(const GeneratorConfig& cfg) {
  check_range(cfg.n_min, cfg.n_max, "n");
  check_range(cfg.m_min, cfg.m_max, "m");
  check_range(cfg.gamma_min, cfg.gamma_max, "gamma");
  check_range(cfg.magnitude_min, cfg.magnitude_max, "magnitude");
  check_range(cfg.sat_variables_min, cfg.sat_variables_max, "sat variables");
  check_range(cfg.sat_clauses_min, cfg.sat_clauses_max, "sat clauses");
  if (cfg.n_min < 1 || cfg.m_min < 1 || cfg.gamma_min < 0 || cfg.magnitude_min < 0 ||
      cfg.sat_variables_min < 1 || cfg.sat_clauses_min < 1)
    throw std::invalid_argument("generator ranges out of domain");

  std::mt19937_64 rng(cfg.seed);

  if (cfg.family == Family::SatGap) {
    hardness::CnfFormula formula;
    formula.variable_count = static_cast<int>(draw(rng, cfg.sat_variables_min, cfg.sat_variables_max));
    const int clauses = static_cast<int>(draw(rng, cfg.sat_clauses_min, cfg.sat_clauses_max));
    for (int c = 0; c < clauses; ++c) {
      std::array<hardness::Literal, 3> clause;
      for (auto& lit : clause) {
        lit.variable = static_cast<int>(draw(rng, 0, formula.variable_count - 1));
        lit.positive = draw(rng, 0, 1) == 1;
      }
      formula.clauses.push_back(clause);
    }
    return hardness::encode(formula).instance;
  }

  const int n = static_cast<int>(draw(rng, cfg.n_min, cfg.n_max));
  const int m = static_cast<int>(draw(rng, cfg.m_min, cfg.m_max));
  const int gamma = static_cast<int>(draw(rng, cfg.gamma_min, cfg.gamma_max));

  switch (cfg.family) {
    case Family::IdenticalUniformRandom:
      return Instance::identical(m, gamma, draw_jobs(rng, n, cfg));

    case Family::IdenticalCorrelated: {
      const Rational factor(draw(rng, 1, 8), 4);
      std::vector<JobTimes> jobs;
      jobs.reserve(n);
      for (int j = 0; j < n; ++j) {
        Value nominal(draw(rng, cfg.magnitude_min, cfg.magnitude_max));
        jobs.push_back({nominal, nominal.scaled_by(factor)});
      }
      return Instance::identical(m, gamma, std::move(jobs));
    }

    case Family::UniformSpeeds: {
      auto jobs = draw_jobs(rng, n, cfg);
      std::vector<Rational> speeds;
      speeds.reserve(m);
      for (int i = 0; i < m; ++i) speeds.emplace_back(draw(rng, 1, 4));
      return Instance::uniform(std::move(speeds), gamma, std::move(jobs));
    }

    case Family::UnrelatedRandom: {
      std::vector<std::vector<Value>> nominal(m, std::vector<Value>(n));
      std::vector<std::vector<Value>> deviation(m, std::vector<Value>(n));
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
          if (draw(rng, 0, 7) == 0) {  // roughly one cell in eight forbidden
            nominal[i][j] = Value::forbidden();
            deviation[i][j] = Value::forbidden();
          } else {
            nominal[i][j] = Value(draw(rng, cfg.magnitude_min, cfg.magnitude_max));
            deviation[i][j] = Value(draw(rng, cfg.magnitude_min, cfg.magnitude_max));
          }
        }
      }
      // Re-open one machine for jobs the forbidden mask locked out entirely.
      for (int j = 0; j < n; ++j) {
        bool feasible = false;
        for (int i = 0; i < m && !feasible; ++i) feasible = !nominal[i][j].is_forbidden();
        if (!feasible) {
          const int i = j % m;
          nominal[i][j] = Value(draw(rng, cfg.magnitude_min, cfg.magnitude_max));
          deviation[i][j] = Value(draw(rng, cfg.magnitude_min, cfg.magnitude_max));
        }
      }
      return Instance::unrelated(gamma, std::move(nominal), std::move(deviation));
    }

    case Family::SatGap: break;  // handled above
  }
  throw std::logic_error("unreachable");
}

}  // namespace robsched::bench
