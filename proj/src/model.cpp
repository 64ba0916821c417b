#include "oddwave/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "oddwave/error.hpp"
#include "oddwave/operators.hpp"

namespace oddwave {
namespace {

void require_even(const SpectralField& f, const char* what) {
  if (f.max_abs_sin() != 0.0) {
    throw ConfigError(std::string(what) + " must be even (pure cosine series)");
  }
}

}  // namespace

SpectralField residual_unprojected(double c, const SpectralField& phi_in, const ModelParams& p,
                                   ResidualFault fault) {
  p.validate();
  const SpectralField phi = phi_in.without_mean();
  const double gamma = p.dispersion();
  const double inv_eps = 1.0 / p.epsilon;

  const SpectralField d1 = derivative(phi, 1);
  const SpectralField d2 = derivative(phi, 2);
  const SpectralField d3 = derivative(phi, 3);
  const SpectralField h_d1 = hilbert(d1);

  SpectralField out = 2.0 * c * (fault == ResidualFault::kParityBreak ? zygmund(phi) : d1);
  out += (c * p.alpha0 + gamma * inv_eps) * hilbert(d2);
  out += inv_eps * (d1 + hilbert(phi));
  out += hilbert(multiply(h_d1, h_d1));
  out -= commutator_h(phi, h_d1);
  // gamma == 0 in the degenerate regime; the term is still evaluated.
  out -= gamma * commutator_h(phi, hilbert(d3));
  return out;
}

SpectralField residual(double c, const SpectralField& phi, const ModelParams& p) {
  require_even(phi, "residual: phi");
  const SpectralField out = residual_unprojected(c, phi, p);
  const double scale = std::max(1.0, out.max_abs_sin());
  if (out.max_abs_cos() > 1e-12 * scale) {
    throw NumericalError("residual: cosine part " + std::to_string(out.max_abs_cos()) +
                         " breaks the odd symmetry");
  }
  return out.projected(Parity::kOdd);
}

SpectralField gateaux(double c, const SpectralField& phi_in, const SpectralField& h_in,
                      const ModelParams& p) {
  p.validate();
  const SpectralField phi = phi_in.without_mean();
  const SpectralField h = h_in.without_mean();
  const double gamma = p.dispersion();
  const double inv_eps = 1.0 / p.epsilon;

  const SpectralField h1 = derivative(h, 1);
  const SpectralField hh1 = hilbert(h1);
  const SpectralField hh3 = hilbert(derivative(h, 3));
  const SpectralField hp1 = hilbert(derivative(phi, 1));
  const SpectralField hp3 = hilbert(derivative(phi, 3));

  SpectralField out = 2.0 * c * h1;
  out += (c * p.alpha0 + gamma * inv_eps) * hilbert(derivative(h, 2));
  out += inv_eps * (h1 + hilbert(h));
  out += 2.0 * hilbert(multiply(hp1, hh1));
  out -= commutator_h(h, hp1);
  out -= commutator_h(phi, hh1);
  out -= gamma * commutator_h(h, hp3);
  out -= gamma * commutator_h(phi, hh3);
  return out;
}

SpectralField residual_dc(const SpectralField& phi_in, const ModelParams& p) {
  p.validate();
  const SpectralField phi = phi_in.without_mean();
  return 2.0 * derivative(phi, 1) + p.alpha0 * hilbert(derivative(phi, 2));
}

double symbol_at(int k, double c, const ModelParams& p) {
  if (k < 1) throw ConfigError("symbol_at: mode index must be >= 1");
  p.validate();
  const double kk = k;
  const double inv_eps = 1.0 / p.epsilon;
  return -(2.0 * c + inv_eps) * kk + inv_eps - (c * p.alpha0 + p.dispersion() * inv_eps) * kk * kk;
}

double critical_speed(int k, const ModelParams& p) {
  if (k < 1) throw ConfigError("critical_speed: mode index must be >= 1");
  p.validate();
  const double kk = k;
  return (1.0 - kk - p.dispersion() * kk * kk) / (kk * (2.0 + p.alpha0 * kk)) / p.epsilon;
}

double d_c_symbol(int k, const ModelParams& p) {
  if (k < 1) throw ConfigError("d_c_symbol: mode index must be >= 1");
  const double kk = k;
  return -2.0 * kk - p.alpha0 * kk * kk;
}

SpectralField mfold_cosine_series(std::span<const double> coeffs, int m) {
  if (m < 1) throw ConfigError("fold must be >= 1");
  const int n = static_cast<int>(coeffs.size());
  SpectralField f(m * n, Parity::kEven);
  for (int j = 1; j <= n; ++j) f.set_cos(m * j, coeffs[j - 1]);
  return f;
}

Eigen::VectorXd mfold_sine_amplitudes(const SpectralField& f, int m, int n) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
  for (int j = 1; j <= n && m * j <= f.n_modes(); ++j) out(j - 1) = f.sin_coeff(m * j);
  return out;
}

OperatorMatrix assemble_jacobian(double c, const SpectralField& phi, const ModelParams& p, int n,
                                 int m) {
  if (n < 1 || m < 1) throw ConfigError("assemble_jacobian: need n >= 1 and m >= 1");
  const int modes = m * n;
  if (phi.n_modes() > modes) {
    for (int k = modes + 1; k <= phi.n_modes(); ++k) {
      if (phi.cos_coeff(k) != 0.0 || phi.sin_coeff(k) != 0.0) {
        throw ConfigError("assemble_jacobian: phi has modes beyond m*n");
      }
    }
  }
  for (int k = 1; k <= std::min(modes, phi.n_modes()); ++k) {
    if (phi.sin_coeff(k) != 0.0 || (k % m != 0 && phi.cos_coeff(k) != 0.0)) {
      throw ConfigError("assemble_jacobian: phi is not an even m-fold field");
    }
  }
  const SpectralField base = phi.resized(modes);

  OperatorMatrix jac{m, n, Eigen::MatrixXd(n, n)};
  for (int j = 1; j <= n; ++j) {
    const SpectralField image =
        gateaux(c, base, SpectralField::cosine_mode(m * j, 1.0, modes), p);
    jac.entries.col(j - 1) = mfold_sine_amplitudes(image, m, n);
  }
  return jac;
}

}  // namespace oddwave
