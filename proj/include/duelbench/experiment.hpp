#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "duelbench/environment.hpp"
#include "duelbench/pair_index.hpp"
#include "duelbench/policy.hpp"

namespace duelbench {

/// Per-round Copeland regret and its running sum.
class RegretLedger {
 public:
  explicit RegretLedger(bool keep_history = false) : keep_history_(keep_history) {}

  void add(double regret) {
    cumulative_ += regret;
    if (keep_history_) {
      per_round_.push_back(regret);
      running_.push_back(cumulative_);
    }
  }

  double cumulative() const { return cumulative_; }
  const std::vector<double>& per_round() const { return per_round_; }
  const std::vector<double>& running() const { return running_; }

 private:
  bool keep_history_;
  double cumulative_ = 0.0;
  std::vector<double> per_round_;
  std::vector<double> running_;
};

struct Checkpoint {
  std::uint64_t round = 0;
  double cum_regret = 0.0;

  friend bool operator==(const Checkpoint&, const Checkpoint&) = default;
};

struct RunOptions {
  std::vector<std::uint64_t> checkpoints;  // strictly increasing, within [1, horizon]
  bool record_trace = false;
};

struct RunResult {
  std::string policy;
  std::size_t game = 0;
  std::size_t iteration = 0;
  std::size_t arms = 0;
  std::vector<Checkpoint> checkpoints;
  std::size_t recommended = 0;
  std::size_t true_winner = 0;
  double wall_seconds = 0.0;
  // Filled only with RunOptions::record_trace.
  std::vector<ArmPair> pairs;
  std::vector<double> per_round_regret;
};

/// `count` log-spaced rounds in [1, horizon], deduplicated, always ending at
/// horizon.
std::vector<std::uint64_t> log_checkpoints(std::uint64_t horizon, std::size_t count);

/// Plays `horizon` rounds of policy against env. Throws ValidationError if
/// horizon is smaller than the number of arm pairs or the checkpoints are
/// malformed.
RunResult run_single(Environment& env, DuelPolicy& policy, std::uint64_t horizon,
                     const RunOptions& options);

struct ExperimentConfig {
  std::vector<std::size_t> arms{5};
  std::uint64_t horizon = 10000;
  std::size_t games = 1;
  std::size_t iterations = 1;
  std::vector<PolicySpec> policies{{"sup-klucb"}};
  std::uint64_t seed = 1;
  double min_gap = 0.0;
  std::size_t checkpoints = 200;
  std::size_t max_attempts = 10000;
  bool serial = false;
  std::size_t threads = 0;  // 0: DUELBENCH_THREADS or hardware concurrency
};

/// Throws ValidationError describing the first problem found.
void validate_config(const ExperimentConfig& cfg);

struct PolicySummary {
  std::vector<std::uint64_t> rounds;
  std::vector<double> mean;
  std::vector<double> p25;
  std::vector<double> p75;
  double final_winner_accuracy = 0.0;
};

struct ExperimentResult {
  std::size_t arms = 0;
  std::vector<PreferenceMatrix> instances;
  std::vector<RunResult> runs;  // ordered by (game, iteration, policy)
  std::map<std::string, PolicySummary> summaries;
};

std::uint64_t instance_seed(std::uint64_t master, std::size_t k, std::size_t game);
std::uint64_t environment_seed(std::uint64_t master, std::size_t k, std::size_t game,
                               std::size_t iteration, std::string_view policy);
std::uint64_t policy_seed(std::uint64_t master, std::size_t k, std::size_t game,
                          std::size_t iteration, std::string_view policy);

/// Linear-interpolated percentile (q in [0,1]) of an unsorted sample.
double percentile(std::vector<double> sample, double q);

/// Aggregates runs of one policy that share the same checkpoint rounds.
PolicySummary summarize(const std::vector<const RunResult*>& runs);

/// Runs every (game, iteration, policy) combination for arm count k. Output
/// is independent of execution order and thread count.
ExperimentResult run_experiment(const ExperimentConfig& cfg, std::size_t k);

/// Worker count: cfg.threads, else DUELBENCH_THREADS, else hardware
/// concurrency; 1 in serial mode.
std::size_t worker_count(const ExperimentConfig& cfg, std::size_t jobs);

}  // namespace duelbench
