#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "oddwave/error.hpp"
#include "oddwave/io.hpp"
#include "oddwave/operators.hpp"

namespace oddwave::cli {
namespace fs = std::filesystem;

void RunConfig::validate() const {
  params.validate();
  if (fold < 1) throw ConfigError("--fold must be >= 1");
  if (command == "bifurcate" && k_max < 1) throw ConfigError("--kmax must be >= 1");
  continuation.validate();
  evolution.validate();
  if (ensemble < 1) throw ConfigError("--ensemble must be >= 1");
  if (degree_tiers.empty()) throw ConfigError("--degrees needs at least one tier");
  for (int d : degree_tiers) {
    if (d < 1) throw ConfigError("--degrees entries must be >= 1");
  }
  if (!(holder_alpha > 0.0 && holder_alpha < 1.0)) throw ConfigError("--alpha must lie in (0, 1)");
  if (holder_grid < 64 || holder_grid % 2 != 0) throw ConfigError("--holder-grid must be even and >= 64");
  if (out.empty()) throw ConfigError("--out must not be empty");
}

nlohmann::json to_json(const RunConfig& cfg) {
  return {{"command", cfg.command},
          {"params", oddwave::to_json(cfg.params)},
          {"fold", cfg.fold},
          {"k_max", cfg.k_max},
          {"continuation", oddwave::to_json(cfg.continuation)},
          {"evolution", oddwave::to_json(cfg.evolution)},
          {"dt_halving", cfg.dt_halving},
          {"profile_at", cfg.profile_at},
          {"verification",
           {{"ensemble", cfg.ensemble},
            {"degree_tiers", cfg.degree_tiers},
            {"alpha", cfg.holder_alpha},
            {"holder_grid", cfg.holder_grid}}},
          {"out", cfg.out},
          {"seed", cfg.seed},
          {"inject_fault", cfg.fault == ResidualFault::kParityBreak}};
}

namespace {

void write_json(const fs::path& path, const nlohmann::json& doc) {
  write_text(path, doc.dump(2) + "\n");
}

int cmd_bifurcate(const RunConfig& cfg, std::ostream& out) {
  const auto table = detect_bifurcations(cfg.params, cfg.k_max, cfg.continuation.n);
  std::ostringstream body;
  body << "k,c_k,simple,transversal,d_c_symbol\n";
  out << std::setw(4) << "k" << std::setw(24) << "c_k" << std::setw(8) << "simple"
      << std::setw(13) << "transversal" << '\n';
  nlohmann::json rows = nlohmann::json::array();
  for (const BifurcationCandidate& c : table) {
    out << std::setw(4) << c.k << std::setw(24) << format_double(c.speed) << std::setw(8)
        << (c.simple ? "yes" : "no") << std::setw(13) << (c.transversal ? "yes" : "no") << '\n';
    body << c.k << ',' << format_double(c.speed) << ',' << c.simple << ',' << c.transversal << ','
         << format_double(d_c_symbol(c.k, cfg.params)) << '\n';
    rows.push_back({{"k", c.k},
                    {"c_k", c.speed},
                    {"simple", c.simple},
                    {"transversal", c.transversal}});
  }
  const nlohmann::json config = to_json(cfg);
  const std::string csv = stamped_csv(body.str(), config);
  write_text(fs::path(cfg.out) / "bifurcations.csv", csv);
  write_json(fs::path(cfg.out) / "bifurcations.json",
             stamped_json({{"code_version", kCodeVersion},
                           {"config", config},
                           {"csv_content_hash", content_hash(csv)},
                           {"rows", rows}}));
  return kSuccess;
}

int cmd_branch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Branch branch = continue_branch(cfg.fold, cfg.params, cfg.continuation);
  const nlohmann::json config = to_json(cfg);
  const std::string csv = branch_csv(branch, config);
  write_text(fs::path(cfg.out) / "branch.csv", csv);
  write_json(fs::path(cfg.out) / "branch.json", branch_json(branch, config, content_hash(csv)));

  std::vector<double> at = cfg.profile_at;
  if (at.empty()) at.push_back(branch.points.back().s);
  const int grid = std::max(256, 2 * cfg.fold * cfg.continuation.n + 2);
  write_text(fs::path(cfg.out) / "profiles.csv", profile_csv(branch, at, grid, config));

  for (const BranchPoint& pt : branch.points) {
    out << "s=" << format_double(pt.s) << " c=" << format_double(pt.c)
        << " residual=" << format_double(pt.residual_norm) << " iters=" << pt.newton_iters << '\n';
  }
  out << "status: " << to_string(branch.status) << " (" << branch.points.size() << " points)\n";
  if (branch.status != BranchStatus::kComplete) {
    err << "branch: " << branch.message << '\n';
    return kNumericalFailure;
  }
  return kSuccess;
}

BranchPoint initial_point(const RunConfig& cfg) {
  if (cfg.continuation.s_max == 0.0) {
    BranchPoint trivial;
    trivial.c = critical_speed(cfg.fold, cfg.params);
    trivial.phi = SpectralField(cfg.fold * cfg.continuation.n, Parity::kEven);
    return trivial;
  }
  const Branch branch = continue_branch(cfg.fold, cfg.params, cfg.continuation);
  if (branch.status != BranchStatus::kComplete) {
    throw NumericalError("evolve: could not reach s = " + format_double(cfg.continuation.s_max) +
                         ": " + branch.message);
  }
  return branch.points.back();
}

int cmd_evolve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const BranchPoint point = initial_point(cfg);
  const EvolutionConfig& ecfg = cfg.evolution;
  const Trajectory traj = evolve(point.phi, cfg.params, ecfg);
  const nlohmann::json config = to_json(cfg);
  const int grid = 2 * ecfg.n + 2;

  nlohmann::json snapshots = nlohmann::json::array();
  double trav = 0.0;
  const SpectralField profile = point.phi.resized(ecfg.n);
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    std::ostringstream name;
    name << "snapshot_" << std::setw(4) << std::setfill('0') << i << ".csv";
    const std::string csv = snapshot_csv(traj.times[i], traj.states[i], grid, config);
    write_text(fs::path(cfg.out) / "trajectory" / name.str(), csv);
    const double dev =
        sup_norm(traj.states[i] - translate(profile, point.c * traj.times[i]));
    trav = std::max(trav, dev);
    snapshots.push_back({{"t", traj.times[i]},
                         {"file", "trajectory/" + name.str()},
                         {"mean", traj.states[i].mean()},
                         {"deviation_from_translated_profile", dev},
                         {"content_hash", content_hash(csv)}});
  }

  nlohmann::json manifest = {{"code_version", kCodeVersion},
                             {"config", config},
                             {"params", oddwave::to_json(cfg.params)},
                             {"evolution", oddwave::to_json(ecfg)},
                             {"initial_point", {{"s", point.s}, {"c", point.c}}},
                             {"dt_used", traj.dt},
                             {"steps", traj.steps},
                             {"dt_max_stability", traj.dt_max},
                             {"exceeds_stability_bound", traj.dt > traj.dt_max},
                             {"aborted", traj.aborted},
                             {"abort_time", traj.abort_time},
                             {"mass_drift", traj.mass_drift},
                             {"traveling_error", trav},
                             {"snapshots", snapshots}};
  out << "traveling_error " << format_double(trav) << '\n';
  out << "mass_drift " << format_double(traj.mass_drift) << '\n';

  if (cfg.dt_halving && !traj.aborted) {
    const ConvergenceStudy study =
        traveling_error_study(point, cfg.params, ecfg, {ecfg.dt, 0.5 * ecfg.dt});
    manifest["dt_halving"] = {{"dts", study.dts}, {"errors", study.errors}, {"order", study.order}};
    out << "order_estimate " << format_double(study.order) << " (errors "
        << format_double(study.errors[0]) << ", " << format_double(study.errors[1]) << ")\n";
  }
  write_json(fs::path(cfg.out) / "trajectory.json", stamped_json(std::move(manifest)));

  if (traj.aborted) {
    err << "evolve: non-finite state, stopped at t = " << traj.abort_time << '\n';
    return kNumericalFailure;
  }
  return kSuccess;
}

int report_checks(const RunConfig& cfg, bool quick, const std::string& stem, std::ostream& out) {
  nlohmann::json sweep_doc;
  std::string sweep_text;
  const auto checks = run_checks(cfg, quick, &sweep_doc, &sweep_text);
  bool all = true;
  nlohmann::json rows = nlohmann::json::array();
  for (const CheckResult& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << " measured=" << format_double(c.measured)
        << " threshold=" << format_double(c.threshold) << ' ' << c.detail << '\n';
    all = all && c.passed;
    rows.push_back({{"name", c.name},
                    {"passed", c.passed},
                    {"measured", c.measured},
                    {"threshold", c.threshold},
                    {"detail", c.detail}});
  }
  write_text(fs::path(cfg.out) / (stem + "_sweep.csv"), sweep_text);
  write_json(fs::path(cfg.out) / (stem + "_sweep.json"), sweep_doc);
  write_json(fs::path(cfg.out) / (stem + ".json"),
             stamped_json({{"code_version", kCodeVersion},
                           {"config", to_json(cfg)},
                           {"checks", rows},
                           {"all_passed", all}}));
  return all ? kSuccess : kChecksFailed;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Traveling waves of the odd-viscosity surface-wave model", "oddwave"};
  app.set_config("--config", "", "key = value configuration file");
  app.require_subcommand(1, 1);
  app.fallthrough();

  app.add_option("--epsilon", cfg.params.epsilon, "steepness parameter (> 0)")->capture_default_str();
  app.add_option("--alpha0", cfg.params.alpha0, "odd Reynolds ratio (> 0)")->capture_default_str();
  app.add_option("--beta", cfg.params.beta, "Bond number")->capture_default_str();
  app.add_option("--fold", cfg.fold, "m-fold symmetry")->capture_default_str();
  app.add_option("--modes", cfg.continuation.n, "m-fold Fourier modes")->capture_default_str();
  app.add_option("--kmax", cfg.k_max, "largest mode for bifurcate")->capture_default_str();
  app.add_option("--smax", cfg.continuation.s_max, "branch amplitude")->capture_default_str();
  app.add_option("--ds", cfg.continuation.ds, "first continuation step")->capture_default_str();
  app.add_option("--ds-max", cfg.continuation.ds_max, "step cap")->capture_default_str();
  app.add_option("--tol", cfg.continuation.tol, "Newton residual tolerance")->capture_default_str();
  app.add_option("--max-iter", cfg.continuation.max_iter, "Newton iteration cap")->capture_default_str();
  app.add_option("--profile-at", cfg.profile_at, "amplitudes for the profile dump");
  app.add_option("--dt", cfg.evolution.dt, "time step")->capture_default_str();
  app.add_option("--tfinal", cfg.evolution.t_final, "final time")->capture_default_str();
  CLI::Option* evolve_modes =
      app.add_option("--evolve-modes", cfg.evolution.n,
                     "Fourier modes of the evolved field (default: fold * modes)");
  app.add_option("--saves", cfg.evolution.saves, "trajectory snapshots")->capture_default_str();
  app.add_flag("--dt-halving", cfg.dt_halving, "rerun at dt/2 and report the order");
  app.add_option("--ensemble", cfg.ensemble, "commutator ensemble size")->capture_default_str();
  app.add_option("--degrees", cfg.degree_tiers, "degree tiers")->capture_default_str();
  app.add_option("--alpha", cfg.holder_alpha, "Holder exponent")->capture_default_str();
  app.add_option("--holder-grid", cfg.holder_grid, "Holder grid size")->capture_default_str();
  app.add_option("--out", cfg.out, "output directory")->capture_default_str();
  app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  bool inject = false;
  app.add_flag("--inject-fault", inject, "test hook: corrupt one residual term");

  for (const char* name : {"bifurcate", "branch", "evolve", "verify", "selftest"}) {
    app.add_subcommand(name)->callback([&cfg, name] { cfg.command = name; });
  }
  app.get_subcommand("bifurcate")->description("tabulate critical speeds and simplicity");
  app.get_subcommand("branch")->description("continue the m-fold branch from its bifurcation point");
  app.get_subcommand("evolve")->description("time-integrate a branch profile and measure drift");
  app.get_subcommand("verify")->description("run the invariant and commutator-estimate suite");
  app.get_subcommand("selftest")->description("quick reduced verification");

  try {
    std::vector<std::string> args(argv.rbegin(), argv.rend() - (argv.empty() ? 0 : 1));
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return kConfigError;
  }
  cfg.fault = inject ? ResidualFault::kParityBreak : ResidualFault::kNone;
  if (evolve_modes->count() == 0) cfg.evolution.n = cfg.fold * cfg.continuation.n;

  try {
    cfg.validate();
    if (cfg.command == "bifurcate") return cmd_bifurcate(cfg, out);
    if (cfg.command == "branch") return cmd_branch(cfg, out, err);
    if (cfg.command == "evolve") return cmd_evolve(cfg, out, err);
    if (cfg.command == "verify") return report_checks(cfg, false, "verify", out);
    return report_checks(cfg, true, "selftest", out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  }
}

}  // namespace oddwave::cli
