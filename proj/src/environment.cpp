#include "duelbench/environment.hpp"

#include <string>

#include "duelbench/error.hpp"

namespace duelbench {
namespace {

std::size_t require_winner(const ScoreVector& scores) {
  const auto w = unique_winner(scores);
  if (!w) throw ValidationError("environment requires a unique Copeland winner");
  return *w;
}

}  // namespace

Environment::Environment(PreferenceMatrix pm, std::uint64_t seed)
    : pm_(std::move(pm)),
      scores_(copeland_scores(pm_)),
      winner_(require_winner(scores_)),
      rng_(seed) {}

bool Environment::duel(std::size_t i, std::size_t j) {
  if (i > j || j >= pm_.size()) {
    throw ValidationError("invalid duel (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  return bernoulli(rng_, pm_.at(i, j));
}

double copeland_regret(const ScoreVector& true_scores, std::size_t winner, std::size_t i,
                       std::size_t j) {
  return (2.0 * true_scores[winner] - true_scores[i] - true_scores[j]) / 2.0;
}

double mean_pair_regret(const ScoreVector& true_scores, std::size_t winner) {
  const std::size_t k = true_scores.size();
  double total = 0.0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) total += copeland_regret(true_scores, winner, i, j);
  return total / static_cast<double>(k * (k + 1) / 2);
}

}  // namespace duelbench
