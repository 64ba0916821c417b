#include "oddwave/params.hpp"

#include <cmath>

#include "oddwave/error.hpp"

namespace oddwave {

void ModelParams::validate() const {
  if (!std::isfinite(epsilon) || !std::isfinite(alpha0) || !std::isfinite(beta)) {
    throw ConfigError("model parameters must be finite");
  }
  if (epsilon <= 0.0) throw ConfigError("epsilon must be > 0");
  if (alpha0 <= 0.0) throw ConfigError("alpha0 must be > 0");
}

}  // namespace oddwave
