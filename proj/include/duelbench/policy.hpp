#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "duelbench/pair_index.hpp"
#include "duelbench/rng.hpp"

namespace duelbench {

/// A dueling-bandit learner. Each round: propose() a canonical pair
/// (first <= second), then exactly one observe() with 1 if `first` was
/// preferred over `second`. recommend() reports the current winner estimate
/// and never changes state.
class DuelPolicy {
 public:
  virtual ~DuelPolicy() = default;

  virtual std::string_view name() const = 0;
  virtual std::size_t arms() const = 0;
  /// `round` is one-based.
  virtual ArmPair propose(std::uint64_t round) = 0;
  virtual void observe(bool first_wins) = 0;
  virtual std::size_t recommend() const = 0;
};

/// K x K pairwise win counts shared by the matrix-based baselines.
/// wins(i, j) counts the duels in which i beat j.
class PairwiseWins {
 public:
  explicit PairwiseWins(std::size_t k) : k_(k), w_(k * k, 0) {}

  std::size_t arms() const { return k_; }
  std::uint64_t wins(std::size_t i, std::size_t j) const { return w_[i * k_ + j]; }
  std::uint64_t plays(std::size_t i, std::size_t j) const { return wins(i, j) + wins(j, i); }

  /// Self-duels carry no information and are not recorded.
  void record(std::size_t winner, std::size_t loser) {
    if (winner != loser) ++w_[winner * k_ + loser];
  }

  /// Empirical Copeland winner with unplayed pairs treated as 0.5; ties go
  /// to the lowest index.
  std::size_t empirical_copeland_winner() const;

 private:
  std::size_t k_;
  std::vector<std::uint64_t> w_;
};

/// Lowest index among the maxima of `values`.
std::size_t argmax_lowest(const std::vector<double>& values);

/// Named policy with its parameters, as listed in experiment configs.
struct PolicySpec {
  std::string name;  // "sup-klucb" | "rucb" | "dts" | "random"
  double c1 = 0.0;   // sup-klucb; 0 selects the default for the arm count
  double c2 = -1.0;  // sup-klucb; negative selects the default
  double alpha = 0.0;  // rucb/dts; 0 selects the default
};

/// Throws ValidationError for unknown names or invalid parameters.
std::unique_ptr<DuelPolicy> make_policy(const PolicySpec& spec, std::size_t k, std::uint64_t seed);

/// Checks a spec against an arm count without building the policy.
void validate_policy(const PolicySpec& spec, std::size_t k);

const std::vector<std::string>& known_policies();

}  // namespace duelbench
