#pragma once

#include <stdexcept>

namespace bmaid {

// Invalid configuration or invalid construction of a domain type.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A numeric routine could not produce a trustworthy result: non-finite
// integrands, ambiguous root scans, rejection samplers that never accept.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace bmaid
