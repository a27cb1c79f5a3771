#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "duelbench/pair_index.hpp"
#include "duelbench/policy.hpp"
#include "duelbench/rng.hpp"

namespace duelbench {

struct SupKlucbConfig {
  double c1 = 0.0;
  double c2 = 0.0;
  std::uint64_t seed = 0;
  /// Update per-arm win counts in O(1) per observation instead of recounting
  /// all pairs. Both paths produce identical estimates.
  bool incremental = true;

  /// c1 = 2/K, c2 = 3/K + 40/(K-2)^2. Undefined for K = 2 (the c2 term is
  /// singular); throws ValidationError for K < 3.
  static SupKlucbConfig defaults(std::size_t k, std::uint64_t seed = 0);
};

/// Per-pair counters of the reduced K(K+1)/2-armed problem plus the derived
/// per-arm Sup estimates (empirical Copeland scores) and pair means.
class EstimatorState {
 public:
  explicit EstimatorState(std::size_t k);

  const PairIndexMap& map() const { return map_; }
  std::size_t arms() const { return map_.arms(); }
  std::size_t pairs() const { return map_.pairs(); }

  const std::vector<std::uint64_t>& n_plays() const { return n_plays_; }
  const std::vector<std::uint64_t>& wins() const { return wins_; }
  const std::vector<double>& sup_hat() const { return sup_hat_; }
  const std::vector<double>& mu_hat() const { return mu_hat_; }
  std::uint64_t total_plays() const { return total_plays_; }
  bool all_played() const { return unplayed_ == 0; }

  /// Adds one duel outcome for flat index `idx` and keeps the per-arm beat
  /// counts current. sup_hat/mu_hat are refreshed by refresh().
  void record(std::size_t idx, bool first_wins);

  /// Recomputes sup_hat (from the incremental beat counts, or by a full
  /// recount when `incremental` is false) and then mu_hat.
  void refresh(bool incremental);

 private:
  PairIndexMap map_;
  std::vector<std::uint64_t> n_plays_;
  std::vector<std::uint64_t> wins_;
  std::vector<std::uint64_t> beats_;
  std::vector<double> sup_hat_;
  std::vector<double> mu_hat_;
  std::uint64_t total_plays_ = 0;
  std::size_t unplayed_;
};

/// Empirical Copeland score per arm by full recount over ordered pairs:
/// p_ij = W/N for i < j and 1 - W/N for i > j; self-pairs ignored. Throws
/// ValidationError if an off-diagonal pair has never been played.
std::vector<double> estimate_sup_copeland(const EstimatorState& state);

/// KL-UCB threshold c1*ln(m) + c2*ln(ln(m) + 1) with m = round - pairs.
double sup_klucb_threshold(const SupKlucbConfig& config, std::uint64_t round,
                           std::size_t pairs);

/// One selection after the initialization sweep (round > pairs): the pair
/// maximizing the KL-UCB index of mu_hat, ties uniformly at random.
std::size_t sup_klucb_step(const EstimatorState& state, const SupKlucbConfig& config,
                           std::uint64_t round, Rng& rng);

void sup_klucb_observe(EstimatorState& state, std::size_t idx, bool first_wins,
                       bool incremental = true);

/// argmax of sup_hat, lowest index on ties.
std::size_t sup_klucb_recommend(const EstimatorState& state);

/// Dueling bandits reduced to a K(K+1)/2-armed KL-UCB problem whose arm
/// means are products of per-arm Copeland estimates. Rounds 1..K(K+1)/2
/// play every pair once in index order.
class SupKlucbPolicy final : public DuelPolicy {
 public:
  SupKlucbPolicy(std::size_t k, const SupKlucbConfig& config);

  std::string_view name() const override { return "sup-klucb"; }
  std::size_t arms() const override { return state_.arms(); }
  ArmPair propose(std::uint64_t round) override;
  void observe(bool first_wins) override;
  std::size_t recommend() const override { return sup_klucb_recommend(state_); }

  const EstimatorState& state() const { return state_; }
  const SupKlucbConfig& config() const { return config_; }

 private:
  SupKlucbConfig config_;
  EstimatorState state_;
  Rng rng_;
  std::size_t pending_ = 0;
  bool awaiting_ = false;
};

}  // namespace duelbench
