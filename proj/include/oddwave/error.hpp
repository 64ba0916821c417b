#pragma once

#include <stdexcept>

namespace oddwave {

/// Invalid parameters, malformed input or a violated precondition.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Non-convergence, singular systems, non-finite values.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace oddwave
