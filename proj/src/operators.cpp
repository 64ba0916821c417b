#include "oddwave/operators.hpp"

#include <algorithm>
#include <cmath>

#include "oddwave/error.hpp"

namespace oddwave {
namespace {

Parity swapped(Parity p) {
  switch (p) {
    case Parity::kEven:
      return Parity::kOdd;
    case Parity::kOdd:
      return Parity::kEven;
    default:
      return Parity::kGeneral;
  }
}

}  // namespace

SpectralField hilbert(const SpectralField& f) {
  const int n = f.n_modes();
  SpectralField out(n, swapped(f.parity()));
  for (int k = 1; k <= n; ++k) {
    out.set_cos(k, -f.sin_coeff(k));
    out.set_sin(k, f.cos_coeff(k));
  }
  return out;
}

SpectralField zygmund(const SpectralField& f) {
  const int n = f.n_modes();
  SpectralField out(n, f.parity());
  for (int k = 1; k <= n; ++k) {
    out.set_cos(k, k * f.cos_coeff(k));
    out.set_sin(k, k * f.sin_coeff(k));
  }
  return out;
}

SpectralField derivative(const SpectralField& f, int order) {
  if (order < 1 || order > 3) throw ConfigError("derivative: order must be 1, 2 or 3");
  SpectralField cur = f;
  for (int step = 0; step < order; ++step) {
    const int n = cur.n_modes();
    SpectralField next(n, swapped(cur.parity()));
    // a cos(kx) + b sin(kx) -> k b cos(kx) - k a sin(kx)
    for (int k = 1; k <= n; ++k) {
      next.set_cos(k, k * cur.sin_coeff(k));
      next.set_sin(k, -k * cur.cos_coeff(k));
    }
    cur = std::move(next);
  }
  return cur;
}

SpectralField multiply(const SpectralField& f, const SpectralField& g) {
  const int n = std::max(f.n_modes(), g.n_modes());
  // A product mode p <= N_f + N_g aliases onto p - M, which stays clear of
  // 0..N when M > N_f + N_g + N.
  const int m = transform_size(f.n_modes() + g.n_modes() + n + 1);
  const auto fv = to_grid(f, m);
  const auto gv = to_grid(g, m);
  std::vector<double> prod(m);
  std::transform(fv.begin(), fv.end(), gv.begin(), prod.begin(), std::multiplies<>());
  SpectralField out = to_spectral(prod).resized(n);
  out.set_grid_size(std::max(4, 2 * n + 2));
  return out;
}

SpectralField commutator_h(const SpectralField& f, const SpectralField& g) {
  return hilbert(multiply(f, g)) - multiply(f, hilbert(g));
}

SpectralField translate(const SpectralField& f, double shift) {
  const int n = f.n_modes();
  SpectralField out(n);
  out.set_cos(0, f.cos_coeff(0));
  for (int k = 1; k <= n; ++k) {
    const double c = std::cos(k * shift);
    const double s = std::sin(k * shift);
    const double a = f.cos_coeff(k);
    const double b = f.sin_coeff(k);
    out.set_cos(k, a * c - b * s);
    out.set_sin(k, a * s + b * c);
  }
  return out;
}

double sup_norm(const SpectralField& f, int oversample) {
  const int m = transform_size(std::max(64, oversample * (2 * f.n_modes() + 2)));
  const auto v = to_grid(f, m);
  double best = 0.0;
  for (double x : v) best = std::max(best, std::abs(x));
  return best;
}

}  // namespace oddwave
