#include <doctest.h>

#include <cmath>
#include <random>

#include "oddwave/error.hpp"
#include "oddwave/model.hpp"
#include "oddwave/operators.hpp"
#include "oracles.hpp"

using namespace oddwave;

namespace {

const ModelParams kBase{0.5, 1.0, 0.5};

SpectralField random_even(std::mt19937_64& rng, int m, int degree, double amp, int n_modes = 0) {
  std::uniform_real_distribution<double> u(-amp, amp);
  std::vector<double> a(degree);
  for (double& x : a) x = u(rng) / (1.0 + 0.2 * (&x - a.data()));
  SpectralField f = mfold_cosine_series(a, m);
  return n_modes > 0 ? f.resized(n_modes) : f;
}

double off_lattice(const SpectralField& f, int m) {
  double worst = 0.0;
  for (int k = 0; k <= f.n_modes(); ++k) {
    if (k % m == 0) continue;
    worst = std::max({worst, std::abs(f.cos_coeff(k)), std::abs(f.sin_coeff(k))});
  }
  return worst;
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_NOTHROW(kBase.validate());
  CHECK_THROWS_AS((ModelParams{0.0, 1.0, 0.0}.validate()), ConfigError);
  CHECK_THROWS_AS((ModelParams{1.0, -1.0, 0.0}.validate()), ConfigError);
  CHECK_THROWS_AS((ModelParams{1.0, 1.0, NAN}.validate()), ConfigError);
  CHECK_THROWS_AS((ModelParams{INFINITY, 1.0, 0.0}.validate()), ConfigError);
  CHECK(ModelParams{1.0, 1.0, 1.0}.regime() == Regime::kDegenerate);
  CHECK(kBase.regime() == Regime::kGeneric);
}

TEST_CASE("trivial solutions") {
  for (double c : {-1.0, 0.0, 2.0}) {
    CHECK(residual(c, SpectralField(16), kBase).max_abs_coeff() == 0.0);
    for (double a : {-3.0, 1.0, 7.0}) {
      CHECK(sup_norm(residual(c, SpectralField::constant(a, 16), kBase)) < 1e-13);
    }
  }
}

TEST_CASE("residual rejects non-even profiles") {
  CHECK_THROWS_AS(residual(0.0, SpectralField::sine_mode(1), kBase), ConfigError);
}

TEST_CASE("single cosine expands to linear plus one quadratic harmonic") {
  // Both commutators vanish on a single cosine, so only H[(H phi')^2] is nonlinear.
  for (int k : {1, 2, 3}) {
    for (double delta : {1e-3, 0.1}) {
      const double c = 0.3;
      const auto out = residual(c, SpectralField::cosine_mode(k, delta, 4 * k), kBase);
      auto expect = SpectralField::sine_mode(k, delta * symbol_at(k, c, kBase), 4 * k);
      expect += SpectralField::sine_mode(2 * k, 0.5 * delta * delta * k * k, 4 * k);
      CHECK((out - expect).max_abs_coeff() < 1e-14);
    }
  }
}

TEST_CASE("residual agrees with its Lambda-cubed form") {
  std::mt19937_64 rng(41);
  for (const ModelParams& p : {kBase, ModelParams{1.0, 1.0, 1.0}, ModelParams{2.0, 0.1, -1.0}}) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto phi = random_even(rng, 1, 20, 0.5);
      const double c = -0.7 + 0.1 * trial;
      const auto a = residual_unprojected(c, phi, p);
      const auto b = oracle::residual_first_form(c, phi, p);
      CHECK((a - b).max_abs_coeff() < 1e-11 * std::max(1.0, b.max_abs_coeff()));
    }
  }
}

TEST_CASE("symbol and critical speed examples") {
  const ModelParams p{1.0, 1.0, 0.0};
  CHECK(symbol_at(1, 0.0, p) == doctest::Approx(-1.0));
  CHECK(critical_speed(1, p) == doctest::Approx(-1.0 / 3.0));
  CHECK(critical_speed(2, p) == doctest::Approx(-5.0 / 8.0));
  CHECK(critical_speed(3, p) == doctest::Approx(-11.0 / 15.0));
  CHECK(d_c_symbol(1, p) == doctest::Approx(-3.0));
  CHECK_THROWS_AS(symbol_at(0, 0.0, p), ConfigError);
  CHECK_THROWS_AS(critical_speed(0, p), ConfigError);
}

TEST_CASE("critical speeds are roots of the symbol over a parameter sweep") {
  for (double eps : {0.1, 0.5, 1.0, 2.0, 10.0})
    for (double a0 : {0.1, 0.5, 1.0, 2.0, 10.0})
      for (double b : {-1.0, 0.0, 0.5, 1.0, 2.0}) {
        const ModelParams p{eps, a0, b};
        for (int k = 1; k <= 50; ++k) {
          const double ck = critical_speed(k, p);
          CHECK(std::abs(symbol_at(k, ck, p)) < 1e-12 * (1 + std::abs(ck) * k * k));
        }
      }
}

TEST_CASE("gateaux matches central finite differences") {
  std::mt19937_64 rng(9);
  const double delta = 1e-5;
  for (int trial = 0; trial < 20; ++trial) {
    const auto phi = random_even(rng, 1, 12, 0.3, 32);
    const auto h = random_even(rng, 1, 12, 1.0, 32);
    const double c = -0.5 + 0.05 * trial;
    const auto fd = (1.0 / (2 * delta)) *
                    (residual(c, phi + delta * h, kBase) - residual(c, phi - delta * h, kBase));
    const auto g = gateaux(c, phi, h, kBase);
    CHECK((g - fd).max_abs_coeff() < 1e-6 * g.max_abs_coeff());
  }
}

TEST_CASE("gateaux is linear in the direction") {
  std::mt19937_64 rng(19);
  const auto phi = random_even(rng, 1, 10, 0.3, 32);
  const auto h1 = random_even(rng, 1, 10, 1.0, 32);
  const auto h2 = random_even(rng, 1, 10, 1.0, 32);
  const auto lhs = gateaux(0.1, phi, 2.0 * h1 - 3.0 * h2, kBase);
  const auto rhs = 2.0 * gateaux(0.1, phi, h1, kBase) - 3.0 * gateaux(0.1, phi, h2, kBase);
  CHECK((lhs - rhs).max_abs_coeff() < 1e-12 * rhs.max_abs_coeff());
}

TEST_CASE("residual_dc matches a finite difference in c") {
  std::mt19937_64 rng(29);
  const auto phi = random_even(rng, 1, 10, 0.3, 32);
  const double d = 1e-4;
  const auto fd = (1.0 / (2 * d)) * (residual(0.2 + d, phi, kBase) - residual(0.2 - d, phi, kBase));
  CHECK((residual_dc(phi, kBase) - fd).max_abs_coeff() < 1e-9);
}

TEST_CASE("jacobian at the trivial solution is diagonal with the symbol") {
  for (int m : {1, 2, 3}) {
    const int n = 16;
    const double c = -0.4;
    const auto J = assemble_jacobian(c, SpectralField(m * n), kBase, n, m);
    REQUIRE(J.entries.rows() == n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const double expect = i == j ? symbol_at(m * (j + 1), c, kBase) : 0.0;
        CHECK(std::abs(J.entries(i, j) - expect) < 1e-12 * std::max(1.0, std::abs(expect)));
      }
    // Linear in c with slope d_c_symbol on the diagonal.
    const auto J2 = assemble_jacobian(c + 1.0, SpectralField(m * n), kBase, n, m);
    for (int j = 0; j < n; ++j) {
      const double slope = J2.entries(j, j) - J.entries(j, j);
      CHECK(slope == doctest::Approx(d_c_symbol(m * (j + 1), kBase)).epsilon(1e-12));
    }
  }
}

TEST_CASE("jacobian columns equal gateaux images") {
  std::mt19937_64 rng(31);
  const int m = 2, n = 12;
  const auto phi = random_even(rng, m, 6, 0.2, m * n);
  const auto J = assemble_jacobian(0.3, phi, kBase, n, m);
  CHECK(J.is_finite());
  for (int j : {0, 3, 11}) {
    const auto col = gateaux(0.3, phi, SpectralField::cosine_mode(m * (j + 1), 1.0, m * n), kBase);
    const Eigen::VectorXd amps = mfold_sine_amplitudes(col, m, n);
    CHECK((amps - J.entries.col(j)).cwiseAbs().maxCoeff() < 1e-12 * std::max(1.0, amps.cwiseAbs().maxCoeff()));
  }
  CHECK_THROWS_AS(assemble_jacobian(0.3, SpectralField::cosine_mode(1, 1.0, m * n), kBase, n, m),
                  ConfigError);
}

TEST_CASE("residual maps even m-fold profiles to odd m-fold output") {
  std::mt19937_64 rng(37);
  for (int m : {1, 2, 3, 5}) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto phi = random_even(rng, m, 20 / m + 1, 0.4);
      const auto out = residual_unprojected(-0.2, phi, kBase);
      const double scale = std::max(1.0, out.max_abs_coeff());
      CHECK(out.max_abs_cos() < 1e-12 * scale);
      CHECK(off_lattice(out, m) < 1e-12 * scale);
    }
  }
}

TEST_CASE("the parity fault is visible to the parity check") {
  const auto phi = SpectralField::cosine_mode(1, 0.1, 8);
  const auto out = residual_unprojected(0.5, phi, kBase, ResidualFault::kParityBreak);
  CHECK(out.max_abs_cos() > 1e-3);
}

TEST_CASE("adding a constant does not change the residual") {
  std::mt19937_64 rng(43);
  const auto phi = random_even(rng, 1, 10, 0.3, 32);
  const auto shifted = phi + SpectralField::constant(2.5, 32);
  CHECK((residual(0.1, phi, kBase) - residual(0.1, shifted, kBase)).max_abs_coeff() < 1e-13);
}

TEST_CASE("nonlinear part scales quadratically") {
  std::mt19937_64 rng(47);
  const auto phi = random_even(rng, 1, 10, 0.3, 32);
  const double c = 0.1;
  auto nonlinear = [&](double t) {
    return residual(c, t * phi, kBase) - t * gateaux(c, SpectralField(32), phi, kBase);
  };
  const auto q1 = nonlinear(1.0);
  for (double t : {0.5, 2.0, 10.0}) {
    CHECK((nonlinear(t) - t * t * q1).max_abs_coeff() < 1e-11 * t * t * q1.max_abs_coeff());
  }
}
