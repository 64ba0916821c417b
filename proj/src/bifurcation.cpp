#include "oddwave/bifurcation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "oddwave/error.hpp"
#include "oddwave/operators.hpp"

namespace oddwave {
namespace {

// Sum of the magnitudes of the terms of symbol_at; the reference size for
// deciding whether the symbol vanishes.
double symbol_scale(int k, double c, const ModelParams& p) {
  const double kk = k;
  const double inv_eps = 1.0 / p.epsilon;
  return std::abs(2.0 * c + inv_eps) * kk + inv_eps +
         std::abs(c * p.alpha0 + p.dispersion() * inv_eps) * kk * kk;
}

bool symbol_vanishes(int k, double c, const ModelParams& p) {
  return std::abs(symbol_at(k, c, p)) <= 1e-10 * symbol_scale(k, c, p);
}

struct NewtonOutcome {
  enum Kind { kConverged, kDiverged, kSingular } kind = kDiverged;
  double c = 0.0;
  SpectralField phi;
  double residual_norm = 0.0;
  int iters = 0;
};

NewtonOutcome newton_at_amplitude(int m, const ModelParams& p, const ContinuationSettings& cfg,
                                  double c, SpectralField phi) {
  const int n = cfg.n;
  NewtonOutcome out;
  for (int iter = 0;; ++iter) {
    const SpectralField res = residual(c, phi, p);
    const double norm = sup_norm(res);
    if (!std::isfinite(norm)) {
      out.kind = NewtonOutcome::kDiverged;
      return out;
    }
    if (norm < cfg.tol) {
      out = {NewtonOutcome::kConverged, c, std::move(phi), norm, iter};
      return out;
    }
    if (iter >= cfg.max_iter) {
      out.kind = NewtonOutcome::kDiverged;
      out.residual_norm = norm;
      return out;
    }

    Eigen::MatrixXd jac = assemble_jacobian(c, phi, p, n, m).entries;
    // The cos(mx) amplitude is pinned; its column is replaced by d/dc.
    jac.col(0) = mfold_sine_amplitudes(residual_dc(phi, p), m, n);
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(jac);
    if (!(lu.rcond() > 1e-14)) {
      out.kind = NewtonOutcome::kSingular;
      return out;
    }
    const Eigen::VectorXd delta = lu.solve(-mfold_sine_amplitudes(res, m, n));
    c += delta(0);
    for (int j = 2; j <= n; ++j) phi.set_cos(m * j, phi.cos_coeff(m * j) + delta(j - 1));
  }
}

}  // namespace

std::vector<BifurcationCandidate> detect_bifurcations(const ModelParams& p, int k_max,
                                                      int truncation) {
  p.validate();
  if (k_max < 1) throw ConfigError("detect_bifurcations: k_max must be >= 1");
  if (truncation < k_max) truncation = k_max;
  std::vector<BifurcationCandidate> out;
  out.reserve(k_max);
  for (int k = 1; k <= k_max; ++k) {
    BifurcationCandidate cand{k, critical_speed(k, p), true, transversality(k, p)};
    for (int j = 1; j <= truncation && cand.simple; ++j) {
      if (j != k && symbol_vanishes(j, cand.speed, p)) cand.simple = false;
    }
    out.push_back(cand);
  }
  return out;
}

int kernel_dimension(double c, const ModelParams& p, int m, int n) {
  if (n < 4) throw ConfigError("kernel_dimension: n must be >= 4");
  const OperatorMatrix jac = assemble_jacobian(c, SpectralField(m * n, Parity::kEven), p, n, m);
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac.entries);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double cutoff = 1e-8 * sv.maxCoeff();
  return static_cast<int>((sv.array() < cutoff).count());
}

bool transversality(int k, const ModelParams& p) { return d_c_symbol(k, p) != 0.0; }

void ContinuationSettings::validate() const {
  if (!(s_max >= 0.0)) throw ConfigError("s_max must be >= 0");
  if (!(ds != 0.0) || !std::isfinite(ds)) throw ConfigError("ds must be nonzero");
  if (!(ds_max > 0.0)) throw ConfigError("ds_max must be > 0");
  if (!(growth >= 1.0)) throw ConfigError("growth must be >= 1");
  if (!(ds_min > 0.0)) throw ConfigError("ds_min must be > 0");
  if (!(tol >= 1e-12)) throw ConfigError("tol must be >= 1e-12");
  if (max_iter < 1) throw ConfigError("max_iter must be >= 1");
  if (n < 4) throw ConfigError("n must be >= 4");
}

const char* to_string(BranchStatus status) {
  switch (status) {
    case BranchStatus::kComplete:
      return "complete";
    case BranchStatus::kNewtonDiverged:
      return "newton_diverged";
    case BranchStatus::kSingular:
      return "singular";
  }
  return "unknown";
}

std::vector<double> Branch::coefficients(const BranchPoint& point) const {
  std::vector<double> out(settings.n, 0.0);
  for (int j = 1; j <= settings.n && m * j <= point.phi.n_modes(); ++j) {
    out[j - 1] = point.phi.cos_coeff(m * j);
  }
  return out;
}

Branch continue_branch(int m, const ModelParams& p, const ContinuationSettings& cfg) {
  p.validate();
  cfg.validate();
  if (m < 1) throw ConfigError("fold m must be >= 1");

  const int n = cfg.n;
  const double c_m = critical_speed(m, p);
  for (int j = 2; j <= n; ++j) {
    if (symbol_vanishes(m * j, c_m, p)) {
      std::ostringstream msg;
      msg << "bifurcation at frequency " << m << " is not simple: frequency " << m * j
          << " shares the speed " << c_m;
      throw NumericalError(msg.str());
    }
  }
  if (!transversality(m, p)) throw NumericalError("transversality fails");

  Branch branch{m, p, cfg, {}, BranchStatus::kComplete, {}};
  BranchPoint trivial;
  trivial.c = c_m;
  trivial.phi = SpectralField(m * n, Parity::kEven);
  branch.points.push_back(trivial);

  const double dir = cfg.ds > 0.0 ? 1.0 : -1.0;
  double step = std::abs(cfg.ds);
  double s = 0.0;
  while (std::abs(s) < cfg.s_max) {
    const BranchPoint& prev = branch.points.back();
    double target = s + dir * step;
    if (std::abs(target) > cfg.s_max) target = dir * cfg.s_max;

    SpectralField guess = prev.phi;
    guess.set_cos(m, target);
    NewtonOutcome res = newton_at_amplitude(m, p, cfg, prev.c, std::move(guess));

    if (res.kind == NewtonOutcome::kSingular) {
      step *= 0.5;
      if (step < cfg.ds_min) {
        branch.status = BranchStatus::kSingular;
        branch.message = "singular Newton matrix below the step floor at s = " +
                         std::to_string(target);
        break;
      }
      continue;
    }
    if (res.kind == NewtonOutcome::kDiverged) {
      branch.status = BranchStatus::kNewtonDiverged;
      branch.message = "Newton did not converge at s = " + std::to_string(target) +
                       "; branch truncated at s = " + std::to_string(s);
      break;
    }

    BranchPoint point;
    point.s = target;
    point.c = res.c;
    point.phi = std::move(res.phi);
    point.residual_norm = res.residual_norm;
    point.newton_iters = res.iters;
    point.refined_residual_norm =
        sup_norm(residual(point.c, point.phi.resized(2 * m * n), p));
    branch.points.push_back(std::move(point));

    s = target;
    step = std::min(step * cfg.growth, cfg.ds_max);
  }
  return branch;
}

Eigen::MatrixXd bordered_jacobian(const BranchPoint& point, const ModelParams& p, int m, int n) {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n + 1, n + 1);
  out.topLeftCorner(n, n) = assemble_jacobian(point.c, point.phi, p, n, m).entries;
  out.topRightCorner(n, 1) = mfold_sine_amplitudes(residual_dc(point.phi, p), m, n);
  out(n, 0) = 1.0;
  return out;
}

}  // namespace oddwave
