#pragma once

#include <cstddef>
#include <cstdint>

#include "duelbench/pair_index.hpp"
#include "duelbench/preference_matrix.hpp"
#include "duelbench/rng.hpp"
#include "duelbench/scores.hpp"

namespace duelbench {

/// Stationary duel oracle over a preference matrix with a unique Copeland
/// winner. Construction throws ValidationError when the winner is not
/// unique.
class Environment {
 public:
  Environment(PreferenceMatrix pm, std::uint64_t seed);

  const PreferenceMatrix& matrix() const { return pm_; }
  const ScoreVector& true_scores() const { return scores_; }
  std::size_t winner() const { return winner_; }
  std::size_t arms() const { return pm_.size(); }

  /// 1 with probability p[i][j]; self-duels are fair coin flips. Requires
  /// i <= j < K.
  bool duel(std::size_t i, std::size_t j);
  bool duel(ArmPair p) { return duel(p.first, p.second); }

 private:
  PreferenceMatrix pm_;
  ScoreVector scores_;
  std::size_t winner_;
  Rng rng_;
};

/// (2*score[winner] - score[i] - score[j]) / 2.
double copeland_regret(const ScoreVector& true_scores, std::size_t winner, std::size_t i,
                       std::size_t j);

/// Average copeland_regret over all K(K+1)/2 unordered pairs, i.e. the
/// expected per-round regret of a uniformly random pair.
double mean_pair_regret(const ScoreVector& true_scores, std::size_t winner);

}  // namespace duelbench
