#include "duelbench/cli.hpp"

#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "duelbench/config.hpp"
#include "duelbench/error.hpp"
#include "duelbench/experiment.hpp"
#include "duelbench/results_io.hpp"
#include "duelbench/svg_plot.hpp"

namespace duelbench {
namespace {

namespace fs = std::filesystem;

struct Overrides {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> horizon;
  std::optional<std::string> arms;
  std::optional<std::size_t> games;
  std::optional<std::size_t> iterations;
  std::optional<std::string> policies;
  std::optional<std::string> out;
  std::optional<std::size_t> checkpoints;
  bool serial = false;
};

void add_experiment_flags(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config_path, "Experiment config file");
  cmd->add_option("--seed", o.seed, "Master seed");
  cmd->add_option("--horizon", o.horizon, "Rounds per run");
  cmd->add_option("--arms", o.arms, "Arm count or comma-separated list");
  cmd->add_option("--games", o.games, "Random instances per arm count");
  cmd->add_option("--iterations", o.iterations, "Repeats per instance");
  cmd->add_option("--policies", o.policies, "Comma-separated policy names");
  cmd->add_option("--out", o.out, "Output directory");
  cmd->add_option("--checkpoints", o.checkpoints, "Log-spaced checkpoint count");
  cmd->add_flag("--serial", o.serial, "Run on a single thread");
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

CliConfig resolve(const Overrides& o) {
  CliConfig cfg;
  if (!o.config_path.empty()) {
    std::string text;
    try {
      text = read_file(o.config_path);
    } catch (const RuntimeError& e) {
      throw ValidationError(e.what());
    }
    cfg = parse_config(text);
  }
  ExperimentConfig& ex = cfg.experiment;
  if (o.seed) ex.seed = *o.seed;
  if (o.horizon) ex.horizon = *o.horizon;
  if (o.games) ex.games = *o.games;
  if (o.iterations) ex.iterations = *o.iterations;
  if (o.checkpoints) ex.checkpoints = *o.checkpoints;
  if (o.out) cfg.out_dir = *o.out;
  if (o.serial) ex.serial = true;
  if (o.arms) {
    ex.arms.clear();
    for (const auto& tok : split_csv(*o.arms)) {
      std::size_t used = 0;
      unsigned long long k = 0;
      try {
        k = std::stoull(tok, &used);
      } catch (const std::logic_error&) {
        used = 0;
      }
      if (used == 0 || used != tok.size()) throw ValidationError("bad --arms entry '" + tok + "'");
      ex.arms.push_back(k);
    }
  }
  if (o.policies) {
    // Keep parameters from the config file for policies that stay selected.
    std::vector<PolicySpec> chosen;
    for (const auto& name : split_csv(*o.policies)) {
      PolicySpec spec{name};
      for (const auto& existing : ex.policies) {
        if (existing.name == name) spec = existing;
      }
      chosen.push_back(spec);
    }
    ex.policies = std::move(chosen);
  }
  validate_config(ex);
  return cfg;
}

std::vector<std::string> policy_names(const ExperimentConfig& ex) {
  std::vector<std::string> names;
  for (const auto& p : ex.policies) names.push_back(p.name);
  return names;
}

int cmd_run(const Overrides& o, std::ostream& out) {
  const CliConfig cfg = resolve(o);
  if (cfg.experiment.arms.size() != 1) {
    throw ValidationError("run takes a single arm count; use sweep for a list");
  }
  const fs::path dir = cfg.out_dir;
  const ExperimentResult res = run_experiment(cfg.experiment, cfg.experiment.arms.front());
  write_experiment(dir, res);
  write_file(dir / "config.resolved.toml", to_config_text(cfg));
  out << "wrote " << res.runs.size() << " runs to " << dir.string() << '\n';
  return kExitOk;
}

int cmd_sweep(const Overrides& o, std::ostream& out) {
  const CliConfig cfg = resolve(o);
  const fs::path dir = cfg.out_dir;
  std::vector<ExperimentResult> results;
  for (std::size_t k : cfg.experiment.arms) {
    results.push_back(run_experiment(cfg.experiment, k));
    write_experiment(dir / ("k_" + std::to_string(k)), results.back());
    out << "K=" << k << ": " << results.back().runs.size() << " runs\n";
    // Drop the per-run checkpoint data of finished arm counts.
    results.back().runs.clear();
    results.back().instances.clear();
  }
  write_file(dir / "summary.json",
             sweep_summary_json(results, policy_names(cfg.experiment)).dump(2) + "\n");
  write_file(dir / "config.resolved.toml", to_config_text(cfg));
  out << "wrote sweep summary to " << (dir / "summary.json").string() << '\n';
  return kExitOk;
}

int cmd_plot(const std::string& summary_path, const std::string& output_path, std::ostream& out) {
  const std::string text = read_file(summary_path);
  nlohmann::json summary;
  try {
    summary = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("cannot parse " + summary_path + ": " + e.what());
  }
  write_file(output_path, render_svg(summary));
  out << "wrote " << output_path << '\n';
  return kExitOk;
}

int cmd_validate(const Overrides& o, std::ostream& out) {
  const CliConfig cfg = resolve(o);
  out << to_config_text(cfg);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dueling-bandit regret benchmarks (Sup-KLUCB, RUCB, DTS)", "duelbench"};
  app.require_subcommand(1);

  Overrides run_o, sweep_o, validate_o;
  CLI::App* run = app.add_subcommand("run", "Run one experiment for a single arm count");
  add_experiment_flags(run, run_o);
  CLI::App* sweep = app.add_subcommand("sweep", "Run the experiment for every arm count in a list");
  add_experiment_flags(sweep, sweep_o);
  CLI::App* validate = app.add_subcommand("validate", "Check a config and print it resolved");
  add_experiment_flags(validate, validate_o);
  std::string summary_path, output_path;
  CLI::App* plot = app.add_subcommand("plot", "Render a summary JSON as SVG");
  plot->add_option("summary", summary_path, "summary.json from run or sweep")->required();
  plot->add_option("output", output_path, "SVG file to write")->required();

  std::vector<std::string> argv_store{"duelbench"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "duelbench: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    if (run->parsed()) return cmd_run(run_o, out);
    if (sweep->parsed()) return cmd_sweep(sweep_o, out);
    if (validate->parsed()) return cmd_validate(validate_o, out);
    if (plot->parsed()) return cmd_plot(summary_path, output_path, out);
  } catch (const ValidationError& e) {
    err << "duelbench: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "duelbench: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitConfig;
}

}  // namespace duelbench
