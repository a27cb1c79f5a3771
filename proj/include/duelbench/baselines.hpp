#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "duelbench/policy.hpp"

namespace duelbench {

/// Optimistic estimate of P(i beats j): w_ij/n_ij + sqrt(alpha*ln(t)/n_ij),
/// 1 when the pair is unplayed, 0.5 on the diagonal.
double rucb_upper(const PairwiseWins& w, std::size_t i, std::size_t j, double alpha,
                  std::uint64_t t);

/// Pessimistic counterpart of rucb_upper; 0 when the pair is unplayed.
double rucb_lower(const PairwiseWins& w, std::size_t i, std::size_t j, double alpha,
                  std::uint64_t t);

/// Arms whose optimistic estimate is at least 0.5 against every arm.
std::vector<std::size_t> rucb_candidates(const PairwiseWins& w, double alpha, std::uint64_t t);

/// Relative Upper Confidence Bound. The first arm comes from the potential
/// Condorcet winners (favouring the remembered hypothesis), the second is
/// the strongest optimistic challenger of the first.
class RucbPolicy final : public DuelPolicy {
 public:
  static constexpr double kDefaultAlpha = 1.01;

  RucbPolicy(std::size_t k, double alpha, std::uint64_t seed);

  std::string_view name() const override { return "rucb"; }
  std::size_t arms() const override { return wins_.arms(); }
  ArmPair propose(std::uint64_t round) override;
  void observe(bool first_wins) override;
  std::size_t recommend() const override { return wins_.empirical_copeland_winner(); }

  const PairwiseWins& wins() const { return wins_; }

 private:
  double alpha_;
  PairwiseWins wins_;
  Rng rng_;
  std::vector<std::size_t> hypothesis_;  // empty or a single arm
  ArmPair pending_;
  bool awaiting_ = false;
};

/// Double Thompson Sampling for Copeland winners: confidence bounds prune
/// the first-arm candidates, one Beta posterior sample over all pairs picks
/// the first arm, a second sample over its column picks the opponent.
class DtsPolicy final : public DuelPolicy {
 public:
  static constexpr double kDefaultAlpha = 0.51;

  DtsPolicy(std::size_t k, double alpha, std::uint64_t seed);

  std::string_view name() const override { return "dts"; }
  std::size_t arms() const override { return wins_.arms(); }
  ArmPair propose(std::uint64_t round) override;
  void observe(bool first_wins) override;
  std::size_t recommend() const override { return wins_.empirical_copeland_winner(); }

 private:
  double sample_beta(std::uint64_t a_wins, std::uint64_t b_wins);

  double alpha_;
  PairwiseWins wins_;
  Rng rng_;
  std::vector<double> theta_;
  ArmPair pending_;
  bool awaiting_ = false;
};

/// Uniformly random pair each round; sanity baseline.
class RandomPolicy final : public DuelPolicy {
 public:
  RandomPolicy(std::size_t k, std::uint64_t seed);

  std::string_view name() const override { return "random"; }
  std::size_t arms() const override { return wins_.arms(); }
  ArmPair propose(std::uint64_t round) override;
  void observe(bool first_wins) override;
  std::size_t recommend() const override { return wins_.empirical_copeland_winner(); }

 private:
  PairIndexMap map_;
  PairwiseWins wins_;
  Rng rng_;
  ArmPair pending_;
  bool awaiting_ = false;
};

}  // namespace duelbench
