#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "oddwave/bifurcation.hpp"
#include "oddwave/evolution.hpp"
#include "oddwave/holder.hpp"

namespace oddwave {

inline constexpr const char* kCodeVersion = "0.1.0";

/// 64-bit FNV-1a of the bytes, as 16 lowercase hex digits.
std::string content_hash(std::string_view data);

/// Shortest round-trip decimal representation.
std::string format_double(double v);

nlohmann::json to_json(const ModelParams& p);
nlohmann::json to_json(const ContinuationSettings& s);
nlohmann::json to_json(const EvolutionConfig& cfg);

/// CSV documents carry two comment lines ahead of the header:
///   # config: <run config as compact JSON>
///   # content_hash: <content_hash of everything after this line>
std::string stamped_csv(std::string_view header_and_rows, const nlohmann::json& run_config);

/// One row per branch point: s, c, residual_norm, newton_iters, a_1..a_n
/// (the cos(m j x) amplitudes).
std::string branch_csv(const Branch& branch, const nlohmann::json& run_config);

/// Envelope with params, fold, truncation, tolerances, status, code version,
/// the run config, the hash of the companion CSV and the points themselves.
nlohmann::json branch_json(const Branch& branch, const nlohmann::json& run_config,
                           std::string_view csv_hash);

/// Grid values x, phi_{s_1}(x), ... for the branch points closest to each
/// requested amplitude.
std::string profile_csv(const Branch& branch, std::span<const double> amplitudes, int grid_size,
                        const nlohmann::json& run_config);

/// Grid values of one trajectory snapshot.
std::string snapshot_csv(double t, const SpectralField& f, int grid_size,
                         const nlohmann::json& run_config);

/// Rows: tier, seed, degree_a, degree_b, alpha, ratio.
std::string sweep_csv(const SweepReport& report, const nlohmann::json& run_config);
nlohmann::json sweep_json(const SweepReport& report, const nlohmann::json& run_config,
                          std::string_view csv_hash);

/// Adds "content_hash" over the compact dump of the object without it.
nlohmann::json stamped_json(nlohmann::json doc);

void write_text(const std::filesystem::path& path, std::string_view text);

}  // namespace oddwave
