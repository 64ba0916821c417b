#include "oddwave/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oddwave/error.hpp"
#include "oddwave/operators.hpp"

namespace oddwave {

void EvolutionConfig::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigError("dt must be > 0");
  if (!(t_final >= 0.0) || !std::isfinite(t_final)) throw ConfigError("t_final must be >= 0");
  if (n < 1) throw ConfigError("evolution truncation must be >= 1");
  if (scheme != "rk4") throw ConfigError("unknown time scheme '" + scheme + "'");
  if (saves < 1) throw ConfigError("saves must be >= 1");
}

SpectralField rhs(const SpectralField& f, const ModelParams& p) {
  p.validate();
  const double gamma = p.dispersion();
  const SpectralField lf = zygmund(f);
  const SpectralField l3f = zygmund(zygmund(lf));

  SpectralField out =
      (1.0 / p.epsilon) * (derivative(f, 1) + hilbert(f) + gamma * hilbert(derivative(f, 2)));
  out += hilbert(multiply(lf, lf));
  out -= commutator_h(f, lf);
  out += gamma * commutator_h(f, l3f);

  SpectralField ft(out.n_modes());
  ft.set_cos(0, 0.5 * out.cos_coeff(0));
  for (int k = 1; k <= out.n_modes(); ++k) {
    const double mass = 2.0 + p.alpha0 * k;
    ft.set_cos(k, out.cos_coeff(k) / mass);
    ft.set_sin(k, out.sin_coeff(k) / mass);
  }
  return ft;
}

double stability_dt_max(int n, const ModelParams& p) {
  p.validate();
  double omega = 0.0;
  for (int k = 1; k <= n; ++k) {
    const double kk = k;
    const double w = (1.0 - kk - p.dispersion() * kk * kk) / (p.epsilon * (2.0 + p.alpha0 * kk));
    omega = std::max(omega, std::abs(w));
  }
  return omega > 0.0 ? 2.0 * std::numbers::sqrt2 / omega : INFINITY;
}

Trajectory evolve(const SpectralField& f0, const ModelParams& p, const EvolutionConfig& cfg) {
  p.validate();
  cfg.validate();
  Trajectory traj;
  traj.steps = std::max(1, static_cast<int>(std::ceil(cfg.t_final / cfg.dt - 1e-9)));
  traj.dt = cfg.t_final / traj.steps;
  traj.dt_max = stability_dt_max(cfg.n, p);

  SpectralField f = f0.resized(cfg.n);
  const double mass0 = f.mean();
  traj.times.push_back(0.0);
  traj.states.push_back(f);
  if (cfg.t_final == 0.0) {
    traj.steps = 0;
    return traj;
  }

  const int saves = std::min(cfg.saves, traj.steps);
  int next_save = 1;
  const double h = traj.dt;
  for (int step = 1; step <= traj.steps; ++step) {
    const SpectralField k1 = rhs(f, p);
    const SpectralField k2 = rhs(f + (0.5 * h) * k1, p);
    const SpectralField k3 = rhs(f + (0.5 * h) * k2, p);
    const SpectralField k4 = rhs(f + h * k3, p);
    SpectralField next = f + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!next.is_finite()) {
      traj.aborted = true;
      traj.abort_time = (step - 1) * h;
      if (traj.times.back() != traj.abort_time) {
        traj.times.push_back(traj.abort_time);
        traj.states.push_back(f);
      }
      break;
    }
    f = std::move(next);
    // Snapshot i lands on step round(i * steps / saves).
    if (next_save <= saves &&
        step == static_cast<int>(std::llround(static_cast<double>(next_save) * traj.steps / saves))) {
      traj.times.push_back(step * h);
      traj.states.push_back(f);
      ++next_save;
    }
  }
  for (const SpectralField& s : traj.states) {
    traj.mass_drift = std::max(traj.mass_drift, std::abs(s.mean() - mass0));
  }
  return traj;
}

double traveling_error(const BranchPoint& point, const ModelParams& p, const EvolutionConfig& cfg) {
  const SpectralField profile = point.phi.resized(cfg.n);
  const Trajectory traj = evolve(profile, p, cfg);
  if (traj.aborted) {
    throw NumericalError("traveling_error: evolution produced non-finite values at t = " +
                         std::to_string(traj.abort_time));
  }
  double err = 0.0;
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    const SpectralField ref = translate(profile, point.c * traj.times[i]);
    err = std::max(err, sup_norm(traj.states[i] - ref));
  }
  return err;
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = std::min(x.size(), y.size());
  if (n < 2) return 0.0;
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  return sxx > 0.0 ? sxy / sxx : 0.0;
}

ConvergenceStudy traveling_error_study(const BranchPoint& point, const ModelParams& p,
                                       const EvolutionConfig& cfg, std::vector<double> dts) {
  ConvergenceStudy study;
  study.dts = std::move(dts);
  for (double dt : study.dts) {
    EvolutionConfig run = cfg;
    run.dt = dt;
    study.errors.push_back(traveling_error(point, p, run));
  }
  study.order = loglog_slope(study.dts, study.errors);
  return study;
}

}  // namespace oddwave
