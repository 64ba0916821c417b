#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oddwave/error.hpp"
#include "oddwave/holder.hpp"
#include "oddwave/operators.hpp"
#include "oracles.hpp"

using namespace oddwave;

TEST_CASE("norm of a constant is its absolute value") {
  const auto c = SpectralField::constant(-2.5, 8);
  for (int k = 0; k <= 3; ++k) CHECK(holder_norm(c, k, 0.5, 256).value == doctest::Approx(2.5));
}

TEST_CASE("seminorm agrees with the all-pairs oracle") {
  std::mt19937_64 rng(1);
  for (double alpha : {0.1, 0.5, 0.9}) {
    for (int m : {16, 64, 250}) {
      const auto v = to_grid(random_trig_polynomial(5, rng).resized(m / 2), m);
      CHECK(holder_seminorm(v, alpha) == doctest::Approx(oracle::holder_seminorm_pairs(v, alpha)).epsilon(1e-14));
    }
  }
}

TEST_CASE("cosine seminorm approaches the continuous supremum") {
  // sup over d in (0, pi] of 2 sin(d/2) / d^(1/2) for |cos x - cos y| at periodic distance d.
  double best = 0.0;
  for (int i = 1; i <= 200000; ++i) {
    const double d = std::numbers::pi * i / 200000;
    best = std::max(best, 2.0 * std::sin(d / 2) / std::sqrt(d));
  }
  const auto v = to_grid(SpectralField::cosine_mode(1, 1.0, 2), 4096);
  const double s = holder_seminorm(v, 0.5);
  CHECK(s <= best + 1e-12);
  CHECK(s == doctest::Approx(best).epsilon(1e-5));
  CHECK(holder_norm(SpectralField::cosine_mode(1), 0, 0.5).value == doctest::Approx(1.0 + best).epsilon(1e-5));
}

TEST_CASE("norm axioms hold on the grid") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = random_trig_polynomial(8, rng);
    const auto g = random_trig_polynomial(8, rng);
    for (int k = 0; k <= 3; ++k) {
      const double nf = holder_norm(f, k, 0.5, 512).value;
      const double ng = holder_norm(g, k, 0.5, 512).value;
      CHECK(holder_norm(-3.0 * f, k, 0.5, 512).value == doctest::Approx(3.0 * nf).epsilon(1e-13));
      CHECK(holder_norm(f + g, k, 0.5, 512).value <= nf + ng + 1e-12);
    }
    const auto fg = multiply(f.resized(16), g.resized(16));
    CHECK(holder_norm(fg, 0, 0.5, 512).value <=
          holder_norm(f, 0, 0.5, 512).value * holder_norm(g, 0, 0.5, 512).value + 1e-12);
  }
}

TEST_CASE("refining the grid never lowers the estimate") {
  std::mt19937_64 rng(3);
  const auto f = random_trig_polynomial(12, rng);
  double prev = 0.0;
  for (int m : {64, 128, 256, 512, 1024}) {
    const double v = holder_norm(f, 2, 0.5, m).value;
    CHECK(v >= prev - 1e-12);
    prev = v;
  }
}

TEST_CASE("argument checks") {
  const auto f = SpectralField::cosine_mode(1);
  CHECK_THROWS_AS(holder_norm(f, 4, 0.5), ConfigError);
  CHECK_THROWS_AS(holder_norm(f, 0, 0.0), ConfigError);
  CHECK_THROWS_AS(holder_norm(f, 0, 1.0), ConfigError);
  CHECK_THROWS_AS(commutator_ratio(f, SpectralField(4), 0.5, 256), ConfigError);
  CHECK_THROWS_AS(commutator_ratio(SpectralField(4), f, 0.5, 256), ConfigError);
}

TEST_CASE("commutator ratio") {
  std::mt19937_64 rng(4);
  const auto b = random_trig_polynomial(6, rng);
  CHECK(commutator_ratio(SpectralField::constant(2.0, 4), b, 0.5, 256) < 1e-14);
  const auto a = random_trig_polynomial(6, rng);
  const double r = commutator_ratio(a, b, 0.5, 512);
  CHECK(std::isfinite(r));
  CHECK(r > 0.0);
  CHECK(commutator_ratio(-4.0 * a, 0.25 * b, 0.5, 512) == doctest::Approx(r).epsilon(1e-12));
}

TEST_CASE("random trig polynomials") {
  std::mt19937_64 rng(5);
  const auto f = random_trig_polynomial(7, rng);
  CHECK(f.n_modes() == 7);
  CHECK(f.cos_coeff(0) == 0.0);
  CHECK(f.max_abs_coeff() <= 1.0);
  std::mt19937_64 again(5);
  CHECK((random_trig_polynomial(7, again) - f).max_abs_coeff() == 0.0);
}

TEST_CASE("sweep is reproducible and seeds are recorded") {
  const std::vector<int> tiers{4, 8};
  const auto a = commutator_sweep(6, tiers, 0.5, 99, 256);
  const auto b = commutator_sweep(6, tiers, 0.5, 99, 256);
  REQUIRE(a.members.size() == 12);
  REQUIRE(a.tiers.size() == 2);
  for (size_t i = 0; i < a.members.size(); ++i) {
    CHECK(a.members[i].ratio == b.members[i].ratio);
    CHECK(a.members[i].degree_a >= 1);
    CHECK(a.members[i].degree_a <= a.members[i].tier);
  }
  CHECK(a.members[0].seed != a.members[1].seed);
  for (const auto& t : a.tiers) CHECK(t.all_finite);
}
