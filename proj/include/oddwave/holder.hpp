#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "oddwave/spectral_field.hpp"

namespace oddwave {

/// Discrete estimate of ||f||_{C^{k,alpha}} on a uniform grid:
///
///   ||f||_{C^{0,alpha}} = sup|f| + [f]_alpha,
///   ||f||_{C^{k,alpha}} = sum_{l<k} sup|d^l f| + sup|d^k f| + [d^k f]_alpha,
///
/// with the seminorm maximized over all grid pairs at periodic distance.
/// Grid sampling can only under-estimate the true norm.
struct HolderEstimate {
  int k = 0;
  double alpha = 0.5;
  double value = 0.0;
  int grid_size = 0;
};

HolderEstimate holder_norm(const SpectralField& f, int k, double alpha, int grid_size = 4096);

/// max_{i != j} |v_i - v_j| / d(x_i, x_j)^alpha for samples on a uniform
/// periodic grid of [0, 2pi), d the distance on the circle.
double holder_seminorm(std::span<const double> values, double alpha);

/// ||[[H, a]][b']||_{C^{1,alpha}} / (||a||_{C^{2,alpha}} ||b||_{C^{1,alpha}}).
/// Throws ConfigError when a or b vanishes identically.
double commutator_ratio(const SpectralField& a, const SpectralField& b, double alpha,
                        int grid_size = 4096);

/// Mean-zero trig polynomial of the given degree with amplitudes uniform in [-1, 1].
SpectralField random_trig_polynomial(int degree, std::mt19937_64& rng);

struct SweepMember {
  int tier = 0;  ///< max degree of the tier
  std::uint64_t seed = 0;
  int degree_a = 0;
  int degree_b = 0;
  double alpha = 0.5;
  double ratio = 0.0;
};

struct SweepTier {
  int max_degree = 0;
  double max_ratio = 0.0;
  double mean_ratio = 0.0;
  bool all_finite = true;
};

struct SweepReport {
  std::uint64_t seed = 0;
  double alpha = 0.5;
  std::vector<SweepMember> members;
  std::vector<SweepTier> tiers;
};

/// For each degree tier, `ensemble_size` pairs (a, b) with degrees drawn
/// uniformly from 1..tier. Each member seeds its own generator from
/// (seed, tier, index), recorded as the member seed.
SweepReport commutator_sweep(int ensemble_size, std::span<const int> degree_tiers, double alpha,
                             std::uint64_t seed, int grid_size = 4096);

}  // namespace oddwave
