#pragma once

#include <stdexcept>

namespace robsched {

/// Thrown when an enumeration-based routine is asked for more work than its
/// configured budget allows (scenario enumeration, brute-force search, ...).
class SizeLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace robsched
