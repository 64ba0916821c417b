#pragma once

#include <Eigen/Dense>

#include "oddwave/params.hpp"
#include "oddwave/spectral_field.hpp"

namespace oddwave {

/// Test hook for mutation checks of the verification harness.
enum class ResidualFault {
  kNone,
  /// Evaluates the 2c phi' term with Lambda phi in place of phi'. A plain
  /// sign flip of any single term cannot be caught by a parity check, since
  /// each term maps even profiles to odd ones on its own.
  kParityBreak,
};

/// Traveling-wave residual F[c, phi] for f(t, x) = phi(x - c t):
///
///   2c phi' + (c alpha0 + (alpha0 - beta)/eps) H[phi''] + (1/eps)(phi' + H[phi])
///   + H[(H phi')^2] - [[H, phi]][H phi'] - (alpha0 - beta) [[H, phi]][H phi'''].
///
/// phi must be even; its mean is discarded. The result is a sine series.
/// Throws NumericalError if the computed cosine part exceeds 1e-12 of the
/// output scale.
SpectralField residual(double c, const SpectralField& phi, const ModelParams& p);

/// Same expression without the parity projection and for any phi.
SpectralField residual_unprojected(double c, const SpectralField& phi, const ModelParams& p,
                                   ResidualFault fault = ResidualFault::kNone);

/// Gateaux derivative of the residual in phi along h. Linear in h.
SpectralField gateaux(double c, const SpectralField& phi, const SpectralField& h,
                      const ModelParams& p);

/// Partial derivative of the residual in c: 2 phi' + alpha0 H[phi''].
SpectralField residual_dc(const SpectralField& phi, const ModelParams& p);

/// Multiplier of the linearization at phi = 0: h_k cos(kx) -> value h_k sin(kx).
double symbol_at(int k, double c, const ModelParams& p);

/// Speed at which symbol_at(k, ., p) vanishes:
/// (1/eps) (1 - k - (alpha0 - beta) k^2) / (k (2 + alpha0 k)).
double critical_speed(int k, const ModelParams& p);

/// d/dc of symbol_at(k, c, p) = -2k - alpha0 k^2.
double d_c_symbol(int k, const ModelParams& p);

/// Matrix of a linear map from span{cos(m j x)} to span{sin(m j x)},
/// j = 1..truncation. Entry (i, j) is the sin(m (i+1) x) amplitude of the
/// image of cos(m (j+1) x).
struct OperatorMatrix {
  int fold = 1;
  int truncation = 0;
  Eigen::MatrixXd entries;

  bool is_finite() const { return entries.allFinite(); }
};

/// Jacobian of the residual at (c, phi) restricted to the m-fold cosine
/// basis of n modes. phi must be supported on multiples of m up to m n.
OperatorMatrix assemble_jacobian(double c, const SpectralField& phi, const ModelParams& p, int n,
                                 int m);

/// Even field with cos(m j x) amplitudes coeffs[j-1], j = 1..n, in N = m n modes.
SpectralField mfold_cosine_series(std::span<const double> coeffs, int m);

/// sin(m j x) amplitudes of f for j = 1..n.
Eigen::VectorXd mfold_sine_amplitudes(const SpectralField& f, int m, int n);

}  // namespace oddwave
