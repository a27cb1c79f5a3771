#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "duelbench/preference_matrix.hpp"

namespace duelbench {

enum class ScoreKind { kCopeland, kBorda, kNormalized };

/// Per-arm scores in [0,1] and the criterion that produced them.
struct ScoreVector {
  std::vector<double> values;
  ScoreKind kind = ScoreKind::kCopeland;

  std::size_t size() const { return values.size(); }
  double operator[](std::size_t i) const { return values[i]; }
};

enum class Direction { kMaximize, kMinimize };

/// A raw winner criterion h with known range [alpha, beta].
struct NormalizationSpec {
  std::vector<double> h;
  double alpha = 0.0;
  double beta = 1.0;
  Direction direction = Direction::kMaximize;
};

/// Fraction of the other K-1 arms that each arm beats with probability
/// strictly above one half.
ScoreVector copeland_scores(const PreferenceMatrix& pm);

/// (1/K) * sum_j p[i][j], including the self term.
ScoreVector borda_scores(const PreferenceMatrix& pm);

/// Affine map of h onto [0,1]; the best arm under `direction` maps to the
/// largest value.
ScoreVector normalize_scores(const NormalizationSpec& spec);

/// Index of the maximum if it is attained by exactly one arm (exact
/// comparison); nullopt on ties.
std::optional<std::size_t> unique_winner(const ScoreVector& scores);

}  // namespace duelbench
