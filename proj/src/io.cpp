#include "oddwave/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "oddwave/error.hpp"

namespace oddwave {

std::string content_hash(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

nlohmann::json to_json(const ModelParams& p) {
  return {{"epsilon", p.epsilon},
          {"alpha0", p.alpha0},
          {"beta", p.beta},
          {"regime", p.regime() == Regime::kDegenerate ? "alpha0_equals_beta" : "generic"}};
}

nlohmann::json to_json(const ContinuationSettings& s) {
  return {{"s_max", s.s_max},       {"ds", s.ds},   {"ds_max", s.ds_max},
          {"growth", s.growth},     {"ds_min", s.ds_min}, {"tol", s.tol},
          {"max_iter", s.max_iter}, {"n", s.n}};
}

nlohmann::json to_json(const EvolutionConfig& cfg) {
  return {{"dt", cfg.dt},
          {"t_final", cfg.t_final},
          {"n", cfg.n},
          {"scheme", cfg.scheme},
          {"saves", cfg.saves}};
}

std::string stamped_csv(std::string_view body, const nlohmann::json& run_config) {
  std::string out = "# config: " + run_config.dump() + "\n";
  out += "# content_hash: " + content_hash(body) + "\n";
  out += body;
  return out;
}

std::string branch_csv(const Branch& branch, const nlohmann::json& run_config) {
  std::ostringstream body;
  body << "s,c,residual_norm,newton_iters";
  for (int j = 1; j <= branch.settings.n; ++j) body << ",a" << j;
  body << '\n';
  for (const BranchPoint& pt : branch.points) {
    body << format_double(pt.s) << ',' << format_double(pt.c) << ','
         << format_double(pt.residual_norm) << ',' << pt.newton_iters;
    for (double a : branch.coefficients(pt)) body << ',' << format_double(a);
    body << '\n';
  }
  return stamped_csv(body.str(), run_config);
}

nlohmann::json branch_json(const Branch& branch, const nlohmann::json& run_config,
                           std::string_view csv_hash) {
  nlohmann::json points = nlohmann::json::array();
  for (const BranchPoint& pt : branch.points) {
    points.push_back({{"s", pt.s},
                      {"c", pt.c},
                      {"residual_norm", pt.residual_norm},
                      {"refined_residual_norm", pt.refined_residual_norm},
                      {"newton_iters", pt.newton_iters},
                      {"coefficients", branch.coefficients(pt)}});
  }
  nlohmann::json doc = {{"code_version", kCodeVersion},
                        {"params", to_json(branch.params)},
                        {"m", branch.m},
                        {"n", branch.settings.n},
                        {"tolerances",
                         {{"newton_tol", branch.settings.tol},
                          {"max_iter", branch.settings.max_iter},
                          {"ds_min", branch.settings.ds_min}}},
                        {"continuation", to_json(branch.settings)},
                        {"status", to_string(branch.status)},
                        {"message", branch.message},
                        {"csv_content_hash", std::string(csv_hash)},
                        {"config", run_config},
                        {"points", points}};
  return stamped_json(std::move(doc));
}

std::string profile_csv(const Branch& branch, std::span<const double> amplitudes, int grid_size,
                        const nlohmann::json& run_config) {
  if (branch.points.empty()) throw ConfigError("profile_csv: empty branch");
  std::vector<std::vector<double>> columns;
  std::ostringstream body;
  body << "x";
  for (double s : amplitudes) {
    const auto it = std::min_element(
        branch.points.begin(), branch.points.end(),
        [s](const BranchPoint& a, const BranchPoint& b) { return std::abs(a.s - s) < std::abs(b.s - s); });
    body << ",phi_s=" << format_double(it->s);
    columns.push_back(to_grid(it->phi, grid_size));
  }
  body << '\n';
  const auto x = grid_points(grid_size);
  for (int j = 0; j < grid_size; ++j) {
    body << format_double(x[j]);
    for (const auto& col : columns) body << ',' << format_double(col[j]);
    body << '\n';
  }
  return stamped_csv(body.str(), run_config);
}

std::string snapshot_csv(double t, const SpectralField& f, int grid_size,
                         const nlohmann::json& run_config) {
  std::ostringstream body;
  body << "t,x,f\n";
  const auto x = grid_points(grid_size);
  const auto v = to_grid(f, grid_size);
  for (int j = 0; j < grid_size; ++j) {
    body << format_double(t) << ',' << format_double(x[j]) << ',' << format_double(v[j]) << '\n';
  }
  return stamped_csv(body.str(), run_config);
}

std::string sweep_csv(const SweepReport& report, const nlohmann::json& run_config) {
  std::ostringstream body;
  body << "tier,seed,degree_a,degree_b,alpha,ratio\n";
  for (const SweepMember& m : report.members) {
    body << m.tier << ',' << m.seed << ',' << m.degree_a << ',' << m.degree_b << ','
         << format_double(m.alpha) << ',' << format_double(m.ratio) << '\n';
  }
  return stamped_csv(body.str(), run_config);
}

nlohmann::json sweep_json(const SweepReport& report, const nlohmann::json& run_config,
                          std::string_view csv_hash) {
  nlohmann::json tiers = nlohmann::json::array();
  for (const SweepTier& t : report.tiers) {
    tiers.push_back({{"max_degree", t.max_degree},
                     {"max_ratio", t.max_ratio},
                     {"mean_ratio", t.mean_ratio},
                     {"all_finite", t.all_finite}});
  }
  return stamped_json({{"code_version", kCodeVersion},
                       {"seed", report.seed},
                       {"alpha", report.alpha},
                       {"ensemble_size", report.tiers.empty() ? 0 : report.members.size() / report.tiers.size()},
                       {"tiers", tiers},
                       {"csv_content_hash", std::string(csv_hash)},
                       {"config", run_config}});
}

nlohmann::json stamped_json(nlohmann::json doc) {
  doc.erase("content_hash");
  const std::string hash = content_hash(doc.dump());
  doc["content_hash"] = hash;
  return doc;
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw ConfigError("failed writing " + path.string());
}

}  // namespace oddwave
