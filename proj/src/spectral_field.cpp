#include "oddwave/spectral_field.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "fft.hpp"
#include "oddwave/error.hpp"

namespace oddwave {
namespace {

Parity combine(Parity a, Parity b) { return a == b ? a : Parity::kGeneral; }

int default_grid(int n_modes) { return std::max(4, 2 * n_modes + 2); }

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

SpectralField::SpectralField(int n_modes, Parity parity)
    : parity_(parity), grid_size_(default_grid(n_modes)) {
  if (n_modes < 0) throw ConfigError("SpectralField: negative mode count");
  cos_.assign(n_modes + 1, 0.0);
  sin_.assign(n_modes + 1, 0.0);
}

SpectralField SpectralField::cosine_series(std::span<const double> amplitudes) {
  if (amplitudes.empty()) throw ConfigError("cosine_series: need at least the mean amplitude");
  SpectralField f(static_cast<int>(amplitudes.size()) - 1, Parity::kEven);
  std::copy(amplitudes.begin(), amplitudes.end(), f.cos_.begin());
  return f;
}

SpectralField SpectralField::sine_series(std::span<const double> amplitudes) {
  if (amplitudes.empty()) throw ConfigError("sine_series: empty amplitude array");
  if (amplitudes[0] != 0.0) throw ConfigError("sine_series: b_0 must be zero");
  SpectralField f(static_cast<int>(amplitudes.size()) - 1, Parity::kOdd);
  std::copy(amplitudes.begin(), amplitudes.end(), f.sin_.begin());
  return f;
}

SpectralField SpectralField::constant(double value, int n_modes) {
  SpectralField f(n_modes, Parity::kEven);
  f.cos_[0] = value;
  return f;
}

SpectralField SpectralField::cosine_mode(int k, double amplitude, int n_modes) {
  if (k < 0) throw ConfigError("cosine_mode: negative wavenumber");
  SpectralField f(std::max(k, n_modes), Parity::kEven);
  f.cos_[k] = amplitude;
  return f;
}

SpectralField SpectralField::sine_mode(int k, double amplitude, int n_modes) {
  if (k < 1) throw ConfigError("sine_mode: wavenumber must be >= 1");
  SpectralField f(std::max(k, n_modes), Parity::kOdd);
  f.sin_[k] = amplitude;
  return f;
}

void SpectralField::set_grid_size(int grid_size) {
  if (grid_size < 4 || grid_size % 2 != 0) {
    throw ConfigError("grid size must be even and >= 4, got " + std::to_string(grid_size));
  }
  grid_size_ = grid_size;
}

void SpectralField::set_cos(int k, double value) {
  if (parity_ == Parity::kOdd && value != 0.0) {
    throw ConfigError("set_cos: field is tagged odd");
  }
  cos_.at(k) = value;
}

void SpectralField::set_sin(int k, double value) {
  if (k == 0 && value != 0.0) throw ConfigError("set_sin: b_0 is identically zero");
  if (parity_ == Parity::kEven && value != 0.0) {
    throw ConfigError("set_sin: field is tagged even");
  }
  sin_.at(k) = value;
}

SpectralField SpectralField::resized(int n_modes) const {
  SpectralField out(n_modes, parity_);
  const int keep = std::min(n_modes, this->n_modes());
  std::copy_n(cos_.begin(), keep + 1, out.cos_.begin());
  std::copy_n(sin_.begin(), keep + 1, out.sin_.begin());
  return out;
}

SpectralField SpectralField::projected(Parity parity) const {
  SpectralField out = *this;
  out.parity_ = parity;
  if (parity == Parity::kEven) std::fill(out.sin_.begin(), out.sin_.end(), 0.0);
  if (parity == Parity::kOdd) std::fill(out.cos_.begin(), out.cos_.end(), 0.0);
  return out;
}

SpectralField SpectralField::with_parity(Parity parity) const {
  if (parity == Parity::kEven && max_abs_sin() != 0.0) {
    throw ConfigError("with_parity: field has sine amplitudes, cannot tag even");
  }
  if (parity == Parity::kOdd && max_abs_cos() != 0.0) {
    throw ConfigError("with_parity: field has cosine amplitudes, cannot tag odd");
  }
  SpectralField out = *this;
  out.parity_ = parity;
  return out;
}

SpectralField SpectralField::without_mean() const {
  SpectralField out = *this;
  out.cos_[0] = 0.0;
  return out;
}

double SpectralField::max_abs_cos() const { return max_abs(cos_); }
double SpectralField::max_abs_sin() const { return max_abs(sin_); }
double SpectralField::max_abs_coeff() const { return std::max(max_abs_cos(), max_abs_sin()); }

bool SpectralField::is_finite() const {
  auto finite = [](double x) { return std::isfinite(x); };
  return std::all_of(cos_.begin(), cos_.end(), finite) &&
         std::all_of(sin_.begin(), sin_.end(), finite);
}

SpectralField& SpectralField::operator+=(const SpectralField& other) {
  if (other.n_modes() > n_modes()) *this = resized(other.n_modes());
  for (int k = 0; k <= other.n_modes(); ++k) {
    cos_[k] += other.cos_[k];
    sin_[k] += other.sin_[k];
  }
  parity_ = combine(parity_, other.parity_);
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& other) {
  if (other.n_modes() > n_modes()) *this = resized(other.n_modes());
  for (int k = 0; k <= other.n_modes(); ++k) {
    cos_[k] -= other.cos_[k];
    sin_[k] -= other.sin_[k];
  }
  parity_ = combine(parity_, other.parity_);
  return *this;
}

SpectralField& SpectralField::operator*=(double scale) {
  for (double& a : cos_) a *= scale;
  for (double& b : sin_) b *= scale;
  return *this;
}

SpectralField operator+(SpectralField lhs, const SpectralField& rhs) { return lhs += rhs; }
SpectralField operator-(SpectralField lhs, const SpectralField& rhs) { return lhs -= rhs; }
SpectralField operator-(SpectralField f) { return f *= -1.0; }
SpectralField operator*(double scale, SpectralField f) { return f *= scale; }
SpectralField operator*(SpectralField f, double scale) { return f *= scale; }

SpectralField to_spectral(std::span<const double> values) {
  const int m = static_cast<int>(values.size());
  if (m < 4 || m % 2 != 0) {
    throw ConfigError("to_spectral: grid length must be even and >= 4, got " +
                      std::to_string(m));
  }
  std::vector<std::complex<double>> spec(m / 2 + 1);
  detail::forward_real(values, spec);

  const int n = m / 2;
  SpectralField f(n);
  const double inv = 1.0 / m;
  f.set_cos(0, spec[0].real() * inv);
  for (int k = 1; k < n; ++k) {
    f.set_cos(k, 2.0 * spec[k].real() * inv);
    f.set_sin(k, -2.0 * spec[k].imag() * inv);
  }
  f.set_cos(n, spec[n].real() * inv);
  f.set_grid_size(m);
  return f;
}

std::vector<double> to_grid(const SpectralField& f, int grid_size) {
  const int n = f.n_modes();
  if (grid_size < 4 || grid_size % 2 != 0) {
    throw ConfigError("to_grid: grid length must be even and >= 4");
  }
  if (grid_size < 2 * n || (grid_size == 2 * n && f.sin_coeff(n) != 0.0)) {
    throw ConfigError("to_grid: grid of " + std::to_string(grid_size) +
                      " points cannot represent " + std::to_string(n) + " modes");
  }
  const int half = grid_size / 2;
  std::vector<std::complex<double>> spec(half + 1, {0.0, 0.0});
  spec[0] = f.cos_coeff(0);
  for (int k = 1; k <= std::min(n, half - 1); ++k) {
    spec[k] = 0.5 * std::complex<double>(f.cos_coeff(k), -f.sin_coeff(k));
  }
  if (n >= half) spec[half] = f.cos_coeff(half);
  std::vector<double> values(grid_size);
  detail::inverse_real(spec, values);
  return values;
}

std::vector<double> to_grid(const SpectralField& f) { return to_grid(f, f.grid_size()); }

std::vector<double> grid_points(int grid_size) {
  std::vector<double> x(grid_size);
  for (int j = 0; j < grid_size; ++j) x[j] = 2.0 * std::numbers::pi * j / grid_size;
  return x;
}

int transform_size(int min_size) {
  for (int n = std::max(4, min_size + (min_size % 2));; n += 2) {
    int r = n;
    for (int p : {2, 3, 5}) {
      while (r % p == 0) r /= p;
    }
    if (r == 1) return n;
  }
}

}  // namespace oddwave
