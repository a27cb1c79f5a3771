#include "duelbench/sup_klucb.hpp"

#include <cmath>
#include <string>

#include "duelbench/error.hpp"
#include "duelbench/kl_index.hpp"

namespace duelbench {

SupKlucbConfig SupKlucbConfig::defaults(std::size_t k, std::uint64_t seed) {
  if (k < 3) {
    throw ValidationError(
        "default sup-klucb constants need K >= 3: c2 = 3/K + 40/(K-2)^2 is singular at K = 2; "
        "set c1 and c2 explicitly");
  }
  const double kd = static_cast<double>(k);
  SupKlucbConfig cfg;
  cfg.c1 = 2.0 / kd;
  cfg.c2 = 3.0 / kd + 40.0 / ((kd - 2.0) * (kd - 2.0));
  cfg.seed = seed;
  return cfg;
}

EstimatorState::EstimatorState(std::size_t k)
    : map_(k),
      n_plays_(map_.pairs(), 0),
      wins_(map_.pairs(), 0),
      beats_(k, 0),
      sup_hat_(k, 0.0),
      mu_hat_(map_.pairs(), 0.0),
      unplayed_(map_.pairs()) {
  if (k < 2) throw ValidationError("sup-klucb needs at least 2 arms");
}

namespace {

// +1 if the lower-indexed arm of the pair leads, -1 if the other one does,
// 0 on an exact tie or no data.
int leader(std::uint64_t wins, std::uint64_t plays) {
  if (plays == 0) return 0;
  if (2 * wins > plays) return 1;
  if (2 * wins < plays) return -1;
  return 0;
}

}  // namespace

void EstimatorState::record(std::size_t idx, bool first_wins) {
  const ArmPair p = map_.pair(idx);
  const int before = leader(wins_[idx], n_plays_[idx]);
  if (n_plays_[idx] == 0) --unplayed_;
  ++n_plays_[idx];
  wins_[idx] += first_wins ? 1 : 0;
  ++total_plays_;
  if (p.first == p.second) return;

  const int after = leader(wins_[idx], n_plays_[idx]);
  if (before == after) return;
  if (before == 1) --beats_[p.first];
  if (before == -1) --beats_[p.second];
  if (after == 1) ++beats_[p.first];
  if (after == -1) ++beats_[p.second];
}

void EstimatorState::refresh(bool incremental) {
  const std::size_t k = arms();
  if (incremental) {
    const double norm = static_cast<double>(k - 1);
    for (std::size_t i = 0; i < k; ++i) sup_hat_[i] = static_cast<double>(beats_[i]) / norm;
  } else {
    sup_hat_ = estimate_sup_copeland(*this);
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      mu_hat_[map_.index_unchecked(i, j)] = sup_hat_[i] * sup_hat_[j];
    }
  }
}

std::vector<double> estimate_sup_copeland(const EstimatorState& state) {
  const std::size_t k = state.arms();
  const PairIndexMap& map = state.map();
  std::vector<double> sup(k, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t beats = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      const std::size_t c = i < j ? map.index_unchecked(i, j) : map.index_unchecked(j, i);
      const std::uint64_t n = state.n_plays()[c];
      if (n == 0) {
        throw ValidationError("pair (" + std::to_string(std::min(i, j)) + "," +
                              std::to_string(std::max(i, j)) + ") has not been played");
      }
      const double share = static_cast<double>(state.wins()[c]) / static_cast<double>(n);
      const double p_ij = i < j ? share : 1.0 - share;
      if (p_ij > 0.5) ++beats;
    }
    sup[i] = static_cast<double>(beats) / static_cast<double>(k - 1);
  }
  return sup;
}

double sup_klucb_threshold(const SupKlucbConfig& config, std::uint64_t round,
                           std::size_t pairs) {
  const double log_m = std::log(static_cast<double>(round - pairs));
  return config.c1 * log_m + config.c2 * std::log(log_m + 1.0);
}

std::size_t sup_klucb_step(const EstimatorState& state, const SupKlucbConfig& config,
                           std::uint64_t round, Rng& rng) {
  const std::size_t kbar = state.pairs();
  if (round <= kbar) throw ValidationError("sup_klucb_step called during initialization");
  const double tau = sup_klucb_threshold(config, round, kbar);
  const auto& mu = state.mu_hat();
  const auto& n = state.n_plays();

  // Every index is at least its mean, so the largest mean bounds the
  // maximum from below. Pinsker's inequality, KL(p,q) >= 2(q-p)^2, bounds
  // each index from above; pairs whose bound falls short are skipped.
  double floor = 0.0;
  for (double m : mu) floor = std::max(floor, m);

  double best = -1.0;
  std::vector<std::size_t> ties;
  for (std::size_t c = 0; c < kbar; ++c) {
    const double ceiling = mu[c] + std::sqrt(tau / (2.0 * static_cast<double>(n[c]))) + 1e-12;
    if (ceiling < floor || ceiling < best) continue;
    const double q = kl_ucb_index_unchecked(n[c], mu[c], tau);
    if (q > best) {
      best = q;
      ties.assign(1, c);
    } else if (q == best) {
      ties.push_back(c);
    }
  }
  if (ties.size() == 1) return ties.front();
  return ties[uniform_index(rng, ties.size())];
}

void sup_klucb_observe(EstimatorState& state, std::size_t idx, bool first_wins,
                       bool incremental) {
  state.record(idx, first_wins);
  if (state.all_played()) state.refresh(incremental);
}

std::size_t sup_klucb_recommend(const EstimatorState& state) {
  return argmax_lowest(state.sup_hat());
}

SupKlucbPolicy::SupKlucbPolicy(std::size_t k, const SupKlucbConfig& config)
    : config_(config), state_(k), rng_(config.seed) {
  if (!(config.c1 > 0.0)) throw ValidationError("sup-klucb requires c1 > 0");
  if (!(config.c2 >= 0.0)) throw ValidationError("sup-klucb requires c2 >= 0");
}

ArmPair SupKlucbPolicy::propose(std::uint64_t round) {
  if (awaiting_) throw RuntimeError("propose called twice without observe");
  const std::size_t kbar = state_.pairs();
  pending_ = round <= kbar ? static_cast<std::size_t>(round - 1)
                           : sup_klucb_step(state_, config_, round, rng_);
  awaiting_ = true;
  return state_.map().pair(pending_);
}

void SupKlucbPolicy::observe(bool first_wins) {
  if (!awaiting_) throw RuntimeError("observe called without a pending proposal");
  sup_klucb_observe(state_, pending_, first_wins, config_.incremental);
  awaiting_ = false;
}

}  // namespace duelbench
