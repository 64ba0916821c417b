#pragma once

// Slow reference implementations used only by the tests. None of them goes
// through the Fourier mode maps of the library.

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "oddwave/operators.hpp"
#include "oddwave/params.hpp"
#include "oddwave/spectral_field.hpp"

namespace oracle {

using Fn = std::function<double(double)>;

/// (1/2pi) p.v. int_{-pi}^{pi} f(y) / tan((x - y)/2) dy. Folding the two
/// sides of the singularity gives an even, smooth, periodic integrand in the
/// offset z, integrated with the midpoint rule (no node at z = 0).
inline double hilbert_quadrature(const Fn& f, double x, int nodes = 512) {
  const double h = 2.0 * std::numbers::pi / nodes;
  double sum = 0.0;
  for (int i = 0; i < nodes; ++i) {
    const double z = -std::numbers::pi + (i + 0.5) * h;
    sum += (f(x - z) - f(x + z)) / std::tan(0.5 * z);
  }
  return sum * h / (4.0 * std::numbers::pi);
}

/// (1/4pi) p.v. int_{-pi}^{pi} (f(x) - f(x - y)) / sin^2(y/2) dy, symmetrized
/// the same way.
inline double zygmund_quadrature(const Fn& f, double x, int nodes = 512) {
  const double h = 2.0 * std::numbers::pi / nodes;
  double sum = 0.0;
  for (int i = 0; i < nodes; ++i) {
    const double y = -std::numbers::pi + (i + 0.5) * h;
    const double s = std::sin(0.5 * y);
    sum += (2.0 * f(x) - f(x - y) - f(x + y)) / (s * s);
  }
  return sum * h / (8.0 * std::numbers::pi);
}

/// Direct evaluation of the trigonometric sum.
inline double evaluate(const oddwave::SpectralField& f, double x) {
  double v = f.cos_coeff(0);
  for (int k = 1; k <= f.n_modes(); ++k) {
    v += f.cos_coeff(k) * std::cos(k * x) + f.sin_coeff(k) * std::sin(k * x);
  }
  return v;
}

inline Fn as_function(const oddwave::SpectralField& f) {
  return [f](double x) { return evaluate(f, x); };
}

/// O(M^2) discrete Fourier coefficients a_k, b_k for k < M/2.
inline void naive_dft(const std::vector<double>& v, std::vector<double>& a, std::vector<double>& b) {
  const int m = static_cast<int>(v.size());
  a.assign(m / 2, 0.0);
  b.assign(m / 2, 0.0);
  for (int k = 0; k < m / 2; ++k) {
    for (int j = 0; j < m; ++j) {
      const double x = 2.0 * std::numbers::pi * j / m;
      a[k] += v[j] * std::cos(k * x);
      b[k] += v[j] * std::sin(k * x);
    }
    a[k] *= (k == 0 ? 1.0 : 2.0) / m;
    b[k] *= 2.0 / m;
  }
}

/// Every ordered pair of grid points, periodic distance.
inline double holder_seminorm_pairs(const std::vector<double>& v, double alpha) {
  const int m = static_cast<int>(v.size());
  double best = 0.0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      double d = std::abs(i - j) * 2.0 * std::numbers::pi / m;
      d = std::min(d, 2.0 * std::numbers::pi - d);
      best = std::max(best, std::abs(v[i] - v[j]) / std::pow(d, alpha));
    }
  }
  return best;
}

/// The residual in its first form, with Lambda[phi'], H[phi''] scaled by
/// (alpha0 - beta)/eps, and the commutator against Lambda^3 phi.
inline oddwave::SpectralField residual_first_form(double c, const oddwave::SpectralField& phi_in,
                                                  const oddwave::ModelParams& p) {
  using namespace oddwave;
  const SpectralField phi = phi_in.without_mean();
  const double gamma = p.alpha0 - p.beta;
  const SpectralField d1 = derivative(phi, 1);
  const SpectralField lphi = zygmund(phi);
  SpectralField out = 2.0 * c * d1 + c * p.alpha0 * zygmund(d1);
  out += (1.0 / p.epsilon) * (d1 + hilbert(phi) + gamma * hilbert(derivative(phi, 2)));
  out += hilbert(multiply(lphi, lphi));
  out -= commutator_h(phi, lphi);
  out += gamma * commutator_h(phi, zygmund(zygmund(lphi)));
  return out;
}

}  // namespace oracle
