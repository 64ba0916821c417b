#pragma once

#include <string>
#include <vector>

#include "oddwave/bifurcation.hpp"
#include "oddwave/params.hpp"
#include "oddwave/spectral_field.hpp"

namespace oddwave {

struct EvolutionConfig {
  double dt = 2e-4;
  double t_final = 1.0;
  int n = 64;                  ///< Fourier modes of the evolved field
  std::string scheme = "rk4";  ///< only classical RK4 is provided
  int saves = 10;              ///< snapshots after t = 0, evenly spaced in steps

  void validate() const;
};

/// Right-hand side of the unidirectional evolution equation solved for f_t:
///
///   (2 + alpha0 Lambda) f_t = (1/eps)(f_x + H f + (alpha0 - beta) H f_xx)
///       + H[(Lambda f)^2] - [[H, f]][Lambda f] + (alpha0 - beta) [[H, f]][Lambda^3 f].
///
/// The mass operator is inverted mode by mode, dividing mode k by 2 + alpha0 k.
SpectralField rhs(const SpectralField& f, const ModelParams& p);

/// Imaginary-axis RK4 bound 2 sqrt(2) / max_k |omega_k| from the linear part.
double stability_dt_max(int n, const ModelParams& p);

struct Trajectory {
  std::vector<double> times;
  std::vector<SpectralField> states;
  double dt = 0.0;  ///< step actually used, t_final / steps
  int steps = 0;
  double dt_max = 0.0;
  bool aborted = false;       ///< non-finite state encountered
  double abort_time = 0.0;    ///< time of the last finite state when aborted
  double mass_drift = 0.0;    ///< max |mean(f(t)) - mean(f0)| over saved states
};

/// Classical RK4 integration. A non-finite stage stops the run; the last
/// finite state and its time are kept and `aborted` is set.
Trajectory evolve(const SpectralField& f0, const ModelParams& p, const EvolutionConfig& cfg);

/// max over save times of sup |f(t) - phi_s(. - c_s t)|, the reference
/// translated spectrally.
double traveling_error(const BranchPoint& point, const ModelParams& p, const EvolutionConfig& cfg);

struct ConvergenceStudy {
  std::vector<double> dts;
  std::vector<double> errors;
  double order = 0.0;  ///< least-squares slope of log(error) against log(dt)
};

/// traveling_error for each time step; the order is fitted over all entries.
ConvergenceStudy traveling_error_study(const BranchPoint& point, const ModelParams& p,
                                       const EvolutionConfig& cfg, std::vector<double> dts);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace oddwave
