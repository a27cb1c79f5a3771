#include "duelbench/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

#include "duelbench/error.hpp"
#include "duelbench/instance.hpp"
#include "duelbench/rng.hpp"

namespace duelbench {

std::vector<std::uint64_t> log_checkpoints(std::uint64_t horizon, std::size_t count) {
  if (horizon == 0) return {};
  if (count <= 1) return {horizon};
  std::vector<std::uint64_t> out;
  const double log_t = std::log(static_cast<double>(horizon));
  for (std::size_t i = 0; i < count; ++i) {
    const double x = std::exp(log_t * static_cast<double>(i) / static_cast<double>(count - 1));
    auto r = static_cast<std::uint64_t>(std::llround(x));
    r = std::clamp<std::uint64_t>(r, 1, horizon);
    if (out.empty() || r > out.back()) out.push_back(r);
  }
  if (out.back() != horizon) out.push_back(horizon);
  return out;
}

RunResult run_single(Environment& env, DuelPolicy& policy, std::uint64_t horizon,
                     const RunOptions& options) {
  const std::size_t k = env.arms();
  if (policy.arms() != k) throw ValidationError("policy and environment disagree on arm count");
  const std::uint64_t kbar = k * (k + 1) / 2;
  if (horizon < kbar) {
    throw ValidationError("horizon " + std::to_string(horizon) + " is shorter than the " +
                          std::to_string(kbar) + " initialization rounds");
  }
  for (std::size_t c = 0; c < options.checkpoints.size(); ++c) {
    const std::uint64_t r = options.checkpoints[c];
    if (r < 1 || r > horizon || (c > 0 && r <= options.checkpoints[c - 1])) {
      throw ValidationError("checkpoints must be strictly increasing within [1, horizon]");
    }
  }

  const auto start = std::chrono::steady_clock::now();
  RunResult result;
  result.policy = std::string(policy.name());
  result.arms = k;
  result.true_winner = env.winner();
  result.checkpoints.reserve(options.checkpoints.size());
  if (options.record_trace) {
    result.pairs.reserve(horizon);
    result.per_round_regret.reserve(horizon);
  }

  RegretLedger ledger;
  std::size_t next = 0;
  for (std::uint64_t n = 1; n <= horizon; ++n) {
    const ArmPair pair = policy.propose(n);
    policy.observe(env.duel(pair));
    const double r = copeland_regret(env.true_scores(), env.winner(), pair.first, pair.second);
    ledger.add(r);
    if (options.record_trace) {
      result.pairs.push_back(pair);
      result.per_round_regret.push_back(r);
    }
    if (next < options.checkpoints.size() && options.checkpoints[next] == n) {
      result.checkpoints.push_back({n, ledger.cumulative()});
      ++next;
    }
  }
  result.recommended = policy.recommend();
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

void validate_config(const ExperimentConfig& cfg) {
  if (cfg.arms.empty()) throw ValidationError("arm list is empty");
  if (cfg.games < 1) throw ValidationError("games must be >= 1");
  if (cfg.iterations < 1) throw ValidationError("iterations must be >= 1");
  if (cfg.policies.empty()) throw ValidationError("policy list is empty");
  if (cfg.checkpoints < 1) throw ValidationError("checkpoints must be >= 1");
  if (!(cfg.min_gap >= 0.0 && cfg.min_gap < 1.0)) {
    throw ValidationError("min_gap must lie in [0, 1)");
  }
  std::set<std::string> seen;
  for (const auto& p : cfg.policies) {
    if (!seen.insert(p.name).second) throw ValidationError("policy '" + p.name + "' listed twice");
  }
  for (std::size_t k : cfg.arms) {
    if (k >= 2) {
      for (const auto& p : cfg.policies) validate_policy(p, k);
    }
    if (k < 3) {
      throw ValidationError("arm count " + std::to_string(k) +
                            " too small: random instances need K >= 3");
    }
    const std::uint64_t kbar = k * (k + 1) / 2;
    if (cfg.horizon < kbar) {
      throw ValidationError("horizon " + std::to_string(cfg.horizon) + " is shorter than K(K+1)/2 = " +
                            std::to_string(kbar) + " for K = " + std::to_string(k));
    }
  }
}

std::uint64_t instance_seed(std::uint64_t master, std::size_t k, std::size_t game) {
  return derive_seed(master, k, game);
}

std::uint64_t environment_seed(std::uint64_t master, std::size_t k, std::size_t game,
                               std::size_t iteration, std::string_view policy) {
  return derive_seed(master, k, game, iteration, hash_name(policy), 1);
}

std::uint64_t policy_seed(std::uint64_t master, std::size_t k, std::size_t game,
                          std::size_t iteration, std::string_view policy) {
  return derive_seed(master, k, game, iteration, hash_name(policy), 2);
}

double percentile(std::vector<double> sample, double q) {
  if (sample.empty()) return 0.0;
  std::sort(sample.begin(), sample.end());
  const double pos = q * static_cast<double>(sample.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sample.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sample[lo] + frac * (sample[hi] - sample[lo]);
}

PolicySummary summarize(const std::vector<const RunResult*>& runs) {
  PolicySummary s;
  if (runs.empty()) return s;
  const auto& ref = runs.front()->checkpoints;
  for (const auto& c : ref) s.rounds.push_back(c.round);
  std::vector<double> column(runs.size());
  std::size_t correct = 0;
  for (const RunResult* r : runs) {
    if (r->checkpoints.size() != ref.size()) throw ValidationError("runs disagree on checkpoints");
    if (r->recommended == r->true_winner) ++correct;
  }
  for (std::size_t c = 0; c < ref.size(); ++c) {
    double sum = 0.0;
    for (std::size_t r = 0; r < runs.size(); ++r) {
      column[r] = runs[r]->checkpoints[c].cum_regret;
      sum += column[r];
    }
    s.mean.push_back(sum / static_cast<double>(runs.size()));
    s.p25.push_back(percentile(column, 0.25));
    s.p75.push_back(percentile(column, 0.75));
  }
  s.final_winner_accuracy = static_cast<double>(correct) / static_cast<double>(runs.size());
  return s;
}

std::size_t worker_count(const ExperimentConfig& cfg, std::size_t jobs) {
  if (cfg.serial) return 1;
  std::size_t n = cfg.threads;
  if (n == 0) {
    if (const char* env = std::getenv("DUELBENCH_THREADS")) {
      n = static_cast<std::size_t>(std::strtoull(env, nullptr, 10));
    }
  }
  if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
  return std::max<std::size_t>(1, std::min(n, jobs));
}

ExperimentResult run_experiment(const ExperimentConfig& cfg, std::size_t k) {
  ExperimentResult out;
  out.arms = k;
  out.instances.reserve(cfg.games);
  InstanceOptions inst{cfg.min_gap, cfg.max_attempts};
  for (std::size_t g = 0; g < cfg.games; ++g) {
    out.instances.push_back(generate_random_instance(k, instance_seed(cfg.seed, k, g), inst));
  }

  const std::size_t per_game = cfg.iterations * cfg.policies.size();
  const std::size_t jobs = cfg.games * per_game;
  out.runs.resize(jobs);
  RunOptions options{log_checkpoints(cfg.horizon, cfg.checkpoints), false};

  auto run_job = [&](std::size_t job) {
    const std::size_t g = job / per_game;
    const std::size_t r = (job % per_game) / cfg.policies.size();
    const PolicySpec& spec = cfg.policies[job % cfg.policies.size()];
    Environment env(out.instances[g], environment_seed(cfg.seed, k, g, r, spec.name));
    auto policy = make_policy(spec, k, policy_seed(cfg.seed, k, g, r, spec.name));
    RunResult res = run_single(env, *policy, cfg.horizon, options);
    res.game = g;
    res.iteration = r;
    out.runs[job] = std::move(res);
  };

  const std::size_t workers = worker_count(cfg, jobs);
  if (workers == 1) {
    for (std::size_t j = 0; j < jobs; ++j) run_job(j);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
          for (std::size_t j = next++; j < jobs; j = next++) {
            try {
              run_job(j);
            } catch (...) {
              std::lock_guard lock(failure_mutex);
              if (!failure) failure = std::current_exception();
            }
          }
        });
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  for (const auto& spec : cfg.policies) {
    std::vector<const RunResult*> mine;
    for (const auto& r : out.runs) {
      if (r.policy == spec.name) mine.push_back(&r);
    }
    out.summaries[spec.name] = summarize(mine);
  }
  return out;
}

}  // namespace duelbench
