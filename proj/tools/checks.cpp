#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "oddwave/holder.hpp"
#include "oddwave/io.hpp"
#include "oddwave/operators.hpp"

namespace oddwave::cli {
namespace {

SpectralField random_even_mfold(int m, int degree, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> amp(-1.0, 1.0);
  std::vector<double> coeffs(degree);
  for (double& a : coeffs) a = amp(rng);
  return mfold_cosine_series(coeffs, m);
}

CheckResult upper_bound(std::string name, double measured, double threshold, std::string detail = {}) {
  return {std::move(name), measured <= threshold, measured, threshold, std::move(detail)};
}

CheckResult operator_identities(std::mt19937_64& rng, int n) {
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const SpectralField f = random_trig_polynomial(n / 3, rng).resized(n);
    const SpectralField g = random_trig_polynomial(n / 3, rng).resized(n);
    const double scale = f.max_abs_coeff() * g.max_abs_coeff();
    worst = std::max(worst, (hilbert(hilbert(f)) + f).max_abs_coeff() / f.max_abs_coeff());
    worst = std::max(worst, (zygmund(f) - hilbert(derivative(f, 1))).max_abs_coeff() /
                                (n * f.max_abs_coeff()));
    worst = std::max(worst, (multiply(f, g) - multiply(g, f)).max_abs_coeff() / scale);
    const SpectralField by_def = hilbert(multiply(f, g)) - multiply(f, hilbert(g));
    worst = std::max(worst, (commutator_h(f, g) - by_def).max_abs_coeff() / scale);
  }
  return upper_bound("operator_identities", worst, 1e-12, "H^2=-I, Lambda=H d/dx, fg=gf, [[H,f]]");
}

CheckResult parity(const RunConfig& cfg, std::mt19937_64& rng, int samples) {
  double worst = 0.0;
  for (int trial = 0; trial < samples; ++trial) {
    const int m = std::array{1, 2, 3, 5}[trial % 4];
    const SpectralField phi = random_even_mfold(m, 20, rng);
    const SpectralField r = residual_unprojected(-0.4, phi, cfg.params, cfg.fault);
    worst = std::max(worst, r.max_abs_cos() / r.max_abs_coeff());
  }
  return upper_bound("parity", worst, 1e-12, "cosine part of F[c, even phi]");
}

CheckResult mfold_closure(const RunConfig& cfg, std::mt19937_64& rng, int samples) {
  double worst = 0.0;
  for (int trial = 0; trial < samples; ++trial) {
    const int m = std::array{2, 3, 5}[trial % 3];
    const SpectralField phi = random_even_mfold(m, 20, rng);
    const SpectralField r = residual_unprojected(-0.4, phi, cfg.params, cfg.fault);
    double off = 0.0;
    for (int k = 1; k <= r.n_modes(); ++k) {
      if (k % m != 0) off = std::max({off, std::abs(r.cos_coeff(k)), std::abs(r.sin_coeff(k))});
    }
    worst = std::max(worst, off / r.max_abs_coeff());
  }
  return upper_bound("mfold_closure", worst, 1e-12, "off-lattice amplitudes of F[c, m-fold phi]");
}

CheckResult symbol_roots() {
  double worst = 0.0;
  for (double eps : {0.1, 0.5, 1.0, 2.0, 10.0}) {
    for (double a0 : {0.1, 0.5, 1.0, 2.0, 10.0}) {
      for (double beta : {-1.0, 0.0, 0.5, 1.0, 2.0}) {
        const ModelParams p{eps, a0, beta};
        for (int k = 1; k <= 50; ++k) {
          const double ck = critical_speed(k, p);
          worst = std::max(worst, std::abs(symbol_at(k, ck, p)) / (1.0 + std::abs(ck) * k * k));
        }
      }
    }
  }
  return upper_bound("symbol_roots", worst, 1e-12, "|symbol(k, c_k)| / (1 + |c_k| k^2)");
}

CheckResult linearization(const RunConfig& cfg, std::mt19937_64& rng, int samples) {
  double worst = 0.0;
  const double delta = 1e-5;
  for (int trial = 0; trial < samples; ++trial) {
    SpectralField phi = random_even_mfold(1, 12, rng);
    SpectralField h = random_even_mfold(1, 12, rng);
    phi *= 1.0 / sup_norm(phi);
    h *= 1.0 / sup_norm(h);
    const double c = -0.4;
    const SpectralField g = gateaux(c, phi, h, cfg.params);
    const SpectralField fd =
        (1.0 / (2.0 * delta)) * (residual(c, phi + delta * h, cfg.params) -
                                 residual(c, phi - delta * h, cfg.params));
    worst = std::max(worst, (g - fd).max_abs_coeff() / g.max_abs_coeff());
  }
  return upper_bound("linearization", worst, 1e-6, "gateaux vs central differences, delta=1e-5");
}

CheckResult kernel_simplicity(const RunConfig& cfg, int n) {
  std::ostringstream detail;
  bool ok = true;
  double worst = 0.0;
  for (int m = 1; m <= 3; ++m) {
    const int dim = kernel_dimension(critical_speed(m, cfg.params), cfg.params, m, n);
    detail << "m=" << m << ":dim=" << dim << ' ';
    ok = ok && dim == 1;
    worst = std::max(worst, std::abs(dim - 1.0));
  }
  return {"kernel_simplicity", ok, worst, 0.0, detail.str()};
}

CheckResult transversal(const RunConfig& cfg) {
  double worst = -INFINITY;
  for (int k = 1; k <= 50; ++k) worst = std::max(worst, d_c_symbol(k, cfg.params));
  return {"transversality", worst < 0.0 && transversality(1, cfg.params), worst, 0.0,
          "max_k d_c symbol, must be < 0"};
}

}  // namespace

std::vector<CheckResult> run_checks(const RunConfig& cfg, bool quick, nlohmann::json* sweep_doc,
                                    std::string* sweep_csv_text) {
  std::mt19937_64 rng(cfg.seed);
  const int samples = quick ? 12 : 100;
  std::vector<CheckResult> out;
  out.push_back(operator_identities(rng, 96));
  out.push_back(parity(cfg, rng, samples));
  out.push_back(mfold_closure(cfg, rng, samples));
  out.push_back(symbol_roots());
  out.push_back(linearization(cfg, rng, quick ? 10 : 50));
  out.push_back(kernel_simplicity(cfg, quick ? 16 : 64));
  out.push_back(transversal(cfg));

  const int ensemble = quick ? std::min(cfg.ensemble, 20) : cfg.ensemble;
  const int grid = quick ? std::min(cfg.holder_grid, 1024) : cfg.holder_grid;
  const SweepReport sweep =
      commutator_sweep(ensemble, cfg.degree_tiers, cfg.holder_alpha, cfg.seed, grid);
  bool finite = true;
  for (const SweepTier& t : sweep.tiers) finite = finite && t.all_finite;
  const double growth = sweep.tiers.back().max_ratio / sweep.tiers.front().max_ratio;
  std::ostringstream detail;
  for (const SweepTier& t : sweep.tiers) {
    detail << "deg<=" << t.max_degree << ":max=" << format_double(t.max_ratio) << ' ';
  }
  out.push_back({"commutator_estimate", finite && growth <= 1.25, growth, 1.25, detail.str()});

  if (sweep_csv_text != nullptr || sweep_doc != nullptr) {
    const nlohmann::json config = to_json(cfg);
    const std::string csv = sweep_csv(sweep, config);
    if (sweep_csv_text != nullptr) *sweep_csv_text = csv;
    if (sweep_doc != nullptr) *sweep_doc = sweep_json(sweep, config, content_hash(csv));
  }
  return out;
}

}  // namespace oddwave::cli
