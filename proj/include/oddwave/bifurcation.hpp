#pragma once

#include <string>
#include <vector>

#include "oddwave/model.hpp"
#include "oddwave/params.hpp"
#include "oddwave/spectral_field.hpp"

namespace oddwave {

struct BifurcationCandidate {
  int k = 1;
  double speed = 0.0;
  bool simple = false;       ///< no other mode j <= truncation shares the speed
  bool transversal = false;  ///< d_c_symbol(k) != 0
};

/// Critical speeds c_k for k = 1..k_max with simplicity flags. A candidate
/// is simple iff |symbol_at(j, c_k)| exceeds 1e-10 of the symbol's scale for
/// every j != k up to the truncation; resonant pairs are flagged, never
/// silently continued.
std::vector<BifurcationCandidate> detect_bifurcations(const ModelParams& p, int k_max,
                                                      int truncation = 64);

/// Number of singular values of assemble_jacobian(c, 0, p, n, m) below
/// 1e-8 times the largest.
int kernel_dimension(double c, const ModelParams& p, int m, int n);

/// True iff the mixed derivative -2k - alpha0 k^2 is nonzero.
bool transversality(int k, const ModelParams& p);

struct ContinuationSettings {
  double s_max = 0.05;     ///< |s| at which the branch stops
  double ds = 1e-3;        ///< first step; the sign picks the branch direction
  double ds_max = 1e-2;    ///< cap for geometric step growth
  double growth = 2.0;     ///< step multiplier after each accepted point
  double ds_min = 1e-8;    ///< step-halving floor on singular Newton matrices
  double tol = 1e-11;      ///< residual sup-norm for convergence
  int max_iter = 25;
  int n = 64;              ///< m-fold modes cos(m j x), j = 1..n

  void validate() const;
};

struct BranchPoint {
  double s = 0.0;  ///< cos(m x) amplitude of phi
  double c = 0.0;  ///< wave speed
  SpectralField phi;
  double residual_norm = 0.0;
  int newton_iters = 0;
  /// Residual sup-norm of the same profile evaluated with 2n modes.
  double refined_residual_norm = 0.0;
};

enum class BranchStatus { kComplete, kNewtonDiverged, kSingular };

struct Branch {
  int m = 1;
  ModelParams params;
  ContinuationSettings settings;
  std::vector<BranchPoint> points;
  BranchStatus status = BranchStatus::kComplete;
  std::string message;

  /// m-fold coefficients a_{m j}, j = 1..n, of a point.
  std::vector<double> coefficients(const BranchPoint& point) const;
};

const char* to_string(BranchStatus status);

/// Traces s -> (c_s, phi_s) from (critical_speed(m), 0) by Newton's method
/// on the unknowns (c, a_{2m}, ..., a_{nm}) with a_m = s held fixed. Each
/// step starts from the previous solution with a_m bumped by the step.
/// Throws NumericalError if the bifurcation point is not simple.
Branch continue_branch(int m, const ModelParams& p, const ContinuationSettings& settings);

/// Bordered Jacobian of the amplitude-constrained system at a branch point:
/// [J_phi  F_c; e_1^T  0], of size n+1.
Eigen::MatrixXd bordered_jacobian(const BranchPoint& point, const ModelParams& p, int m, int n);

}  // namespace oddwave
