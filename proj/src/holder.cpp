#include "oddwave/holder.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oddwave/error.hpp"
#include "oddwave/operators.hpp"

namespace oddwave {
namespace {

double sup_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("Holder exponent must lie in (0, 1)");
}

SpectralField nth_derivative(const SpectralField& f, int order) {
  return order == 0 ? f : derivative(f, order);
}

}  // namespace

double holder_seminorm(std::span<const double> v, double alpha) {
  check_alpha(alpha);
  const int m = static_cast<int>(v.size());
  const double h = 2.0 * std::numbers::pi / m;
  double best = 0.0;
  // Lags up to m/2 cover every pair once at its circle distance.
  for (int d = 1; d <= m / 2; ++d) {
    double diff = 0.0;
    for (int i = 0; i + d < m; ++i) diff = std::max(diff, std::abs(v[i + d] - v[i]));
    for (int i = m - d; i < m; ++i) diff = std::max(diff, std::abs(v[i + d - m] - v[i]));
    best = std::max(best, diff / std::pow(d * h, alpha));
  }
  return best;
}

HolderEstimate holder_norm(const SpectralField& f, int k, double alpha, int grid_size) {
  check_alpha(alpha);
  if (k < 0 || k > 3) throw ConfigError("holder_norm: k must be in 0..3");
  if (grid_size < 2 * f.n_modes() + 2) {
    throw ConfigError("holder_norm: grid too coarse for the field");
  }
  double value = 0.0;
  for (int l = 0; l < k; ++l) value += sup_abs(to_grid(nth_derivative(f, l), grid_size));
  const auto top = to_grid(nth_derivative(f, k), grid_size);
  value += sup_abs(top) + holder_seminorm(top, alpha);
  return {k, alpha, value, grid_size};
}

double commutator_ratio(const SpectralField& a, const SpectralField& b, double alpha,
                        int grid_size) {
  const double den =
      holder_norm(a, 2, alpha, grid_size).value * holder_norm(b, 1, alpha, grid_size).value;
  if (!(den > 0.0)) throw ConfigError("commutator_ratio: a and b must be nonzero");
  const SpectralField theta = commutator_h(a, derivative(b, 1));
  return holder_norm(theta, 1, alpha, grid_size).value / den;
}

SpectralField random_trig_polynomial(int degree, std::mt19937_64& rng) {
  if (degree < 1) throw ConfigError("random_trig_polynomial: degree must be >= 1");
  std::uniform_real_distribution<double> amp(-1.0, 1.0);
  SpectralField f(degree);
  for (int k = 1; k <= degree; ++k) {
    f.set_cos(k, amp(rng));
    f.set_sin(k, amp(rng));
  }
  return f;
}

SweepReport commutator_sweep(int ensemble_size, std::span<const int> degree_tiers, double alpha,
                             std::uint64_t seed, int grid_size) {
  check_alpha(alpha);
  if (ensemble_size < 1) throw ConfigError("ensemble size must be >= 1");
  if (degree_tiers.empty()) throw ConfigError("at least one degree tier is required");

  SweepReport report;
  report.seed = seed;
  report.alpha = alpha;
  for (int tier : degree_tiers) {
    if (tier < 1) throw ConfigError("degree tiers must be >= 1");
    SweepTier summary{tier, 0.0, 0.0, true};
    for (int i = 0; i < ensemble_size; ++i) {
      const std::uint64_t member_seed =
          seed + 0x9E3779B97F4A7C15ull * (static_cast<std::uint64_t>(tier) * 1000003u + i + 1);
      std::mt19937_64 rng(member_seed);
      std::uniform_int_distribution<int> deg(1, tier);
      SweepMember member{tier, member_seed, deg(rng), deg(rng), alpha, 0.0};
      const SpectralField a = random_trig_polynomial(member.degree_a, rng);
      const SpectralField b = random_trig_polynomial(member.degree_b, rng);
      member.ratio = commutator_ratio(a, b, alpha, grid_size);

      summary.all_finite = summary.all_finite && std::isfinite(member.ratio);
      summary.max_ratio = std::max(summary.max_ratio, member.ratio);
      summary.mean_ratio += member.ratio / ensemble_size;
      report.members.push_back(member);
    }
    report.tiers.push_back(summary);
  }
  return report;
}

}  // namespace oddwave
