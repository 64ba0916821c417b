#pragma once

namespace oddwave {

/// Which form the dispersive commutator takes.
enum class Regime {
  kGeneric,     ///< alpha0 != beta, the Lambda^3 commutator is present.
  kDegenerate,  ///< alpha0 == beta, the Lambda^3 commutator vanishes identically.
};

/// Physical parameters of the odd-viscosity surface-wave model.
struct ModelParams {
  double epsilon = 1.0;  ///< steepness, > 0
  double alpha0 = 1.0;   ///< odd Reynolds ratio, > 0
  double beta = 0.0;     ///< Bond number

  /// Throws ConfigError unless epsilon > 0 and alpha0 > 0 (both finite).
  void validate() const;

  /// Coefficient alpha0 - beta of the capillary/odd-viscosity dispersion.
  double dispersion() const { return alpha0 - beta; }
  Regime regime() const { return alpha0 == beta ? Regime::kDegenerate : Regime::kGeneric; }
};

}  // namespace oddwave
