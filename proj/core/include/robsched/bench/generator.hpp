#pragma once

#include "robsched/instance.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace robsched::bench {

enum class Family {
  IdenticalUniformRandom,  // independent uniform nominal and deviation times
  IdenticalCorrelated,     // deviations proportional to nominal times
  UnrelatedRandom,         // independent matrix entries, some Forbidden
  UniformSpeeds,           // shared job vector, random integer speeds
  SatGap,                  // encoding of a random 3-CNF formula
};

std::string_view family_name(Family family);
Family family_from_name(std::string_view name);

/// Everything a deterministic instance draw needs. The same config always
/// produces the same instance, independent of platform and compiler.
struct GeneratorConfig {
  std::uint64_t seed = 1;
  Family family = Family::IdenticalUniformRandom;
  int n_min = 1, n_max = 8;
  int m_min = 1, m_max = 3;
  int gamma_min = 0, gamma_max = 3;
  long long magnitude_min = 0, magnitude_max = 10;  // integer processing times
  int sat_variables_min = 3, sat_variables_max = 8;  // sat-gap only
  int sat_clauses_min = 1, sat_clauses_max = 10;     // sat-gap only
};

/// Draws one instance; throws std::invalid_argument on inconsistent ranges.
Instance generate(const GeneratorConfig& config);

}  // namespace robsched::bench
