#pragma once

#include <span>
#include <vector>

namespace oddwave {

/// Parity tag of a field on the torus. An even field is a pure cosine series
/// (space X), an odd field a pure sine series without mean (space Y).
enum class Parity { kGeneral, kEven, kOdd };

/// A real 2pi-periodic trigonometric polynomial
///
///   f(x) = a_0 + sum_{k=1}^{N} a_k cos(kx) + b_k sin(kx),
///
/// stored as separate cosine and sine amplitude arrays. b_0 is always zero.
/// The parity tag is an enforced invariant: kEven implies all b_k == 0 and
/// kOdd implies all a_k == 0 (including the mean).
class SpectralField {
 public:
  SpectralField() : SpectralField(0) {}
  explicit SpectralField(int n_modes, Parity parity = Parity::kGeneral);

  /// Even field from amplitudes a_0..a_N.
  static SpectralField cosine_series(std::span<const double> amplitudes);
  /// Odd field from amplitudes b_0..b_N; b_0 must be zero.
  static SpectralField sine_series(std::span<const double> amplitudes);
  static SpectralField constant(double value, int n_modes = 0);
  static SpectralField cosine_mode(int k, double amplitude = 1.0, int n_modes = 0);
  static SpectralField sine_mode(int k, double amplitude = 1.0, int n_modes = 0);

  int n_modes() const { return static_cast<int>(cos_.size()) - 1; }
  Parity parity() const { return parity_; }

  /// Collocation grid used by to_grid() without an explicit size.
  int grid_size() const { return grid_size_; }
  void set_grid_size(int grid_size);

  double cos_coeff(int k) const { return cos_[k]; }
  double sin_coeff(int k) const { return sin_[k]; }
  std::span<const double> cos_coeffs() const { return cos_; }
  std::span<const double> sin_coeffs() const { return sin_; }

  /// Setters refuse to break the parity tag.
  void set_cos(int k, double value);
  void set_sin(int k, double value);

  /// Zero-pads or truncates to n modes; parity and grid default follow.
  SpectralField resized(int n_modes) const;
  /// Drops the part of the opposite parity and retags.
  SpectralField projected(Parity parity) const;
  /// Retags after checking the coefficients already satisfy the tag.
  SpectralField with_parity(Parity parity) const;
  SpectralField without_mean() const;

  double mean() const { return cos_[0]; }
  /// max_k |a_k|, max_k |b_k| and the max of both.
  double max_abs_cos() const;
  double max_abs_sin() const;
  double max_abs_coeff() const;
  bool is_finite() const;

  SpectralField& operator+=(const SpectralField& other);
  SpectralField& operator-=(const SpectralField& other);
  SpectralField& operator*=(double scale);

 private:
  std::vector<double> cos_;
  std::vector<double> sin_;
  Parity parity_ = Parity::kGeneral;
  int grid_size_ = 4;
};

SpectralField operator+(SpectralField lhs, const SpectralField& rhs);
SpectralField operator-(SpectralField lhs, const SpectralField& rhs);
SpectralField operator-(SpectralField f);
SpectralField operator*(double scale, SpectralField f);
SpectralField operator*(SpectralField f, double scale);

/// Coefficients of the trigonometric interpolant of equispaced samples on
/// [0, 2pi). The grid length must be even and at least 4. The result keeps
/// N = M/2 modes (the Nyquist mode is a pure cosine) and remembers M as its
/// grid size, so to_grid(to_spectral(v)) reproduces v.
SpectralField to_spectral(std::span<const double> values);

/// Values at x_j = 2pi j / M. Requires M >= 2N; at M == 2N a nonzero
/// sin(Nx) amplitude is not representable and is rejected.
std::vector<double> to_grid(const SpectralField& f, int grid_size);
std::vector<double> to_grid(const SpectralField& f);

/// Equispaced nodes x_j = 2pi j / M.
std::vector<double> grid_points(int grid_size);

/// Smallest even size >= min_size whose prime factors are 2, 3 and 5.
int transform_size(int min_size);

}  // namespace oddwave
