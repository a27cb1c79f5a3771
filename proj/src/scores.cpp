#include "duelbench/scores.hpp"

#include "duelbench/error.hpp"

namespace duelbench {

ScoreVector copeland_scores(const PreferenceMatrix& pm) {
  const std::size_t k = pm.size();
  ScoreVector out{std::vector<double>(k), ScoreKind::kCopeland};
  const double norm = static_cast<double>(k - 1);
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t beats = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if (j != i && pm.at(i, j) > 0.5) ++beats;
    }
    out.values[i] = static_cast<double>(beats) / norm;
  }
  return out;
}

ScoreVector borda_scores(const PreferenceMatrix& pm) {
  const std::size_t k = pm.size();
  ScoreVector out{std::vector<double>(k), ScoreKind::kBorda};
  for (std::size_t i = 0; i < k; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < k; ++j) sum += pm.at(i, j);
    out.values[i] = sum / static_cast<double>(k);
  }
  return out;
}

ScoreVector normalize_scores(const NormalizationSpec& spec) {
  if (!(spec.alpha < spec.beta)) {
    throw ValidationError("normalization requires alpha < beta");
  }
  const double width = spec.beta - spec.alpha;
  ScoreVector out{std::vector<double>(spec.h.size()), ScoreKind::kNormalized};
  for (std::size_t i = 0; i < spec.h.size(); ++i) {
    const double h = spec.h[i];
    if (h < spec.alpha || h > spec.beta) {
      throw ValidationError("criterion value " + std::to_string(h) + " outside [alpha, beta]");
    }
    out.values[i] = spec.direction == Direction::kMaximize ? (h - spec.alpha) / width
                                                           : (spec.beta - h) / width;
  }
  return out;
}

std::optional<std::size_t> unique_winner(const ScoreVector& scores) {
  if (scores.values.empty()) return std::nullopt;
  std::size_t best = 0;
  std::size_t count = 1;
  for (std::size_t i = 1; i < scores.size(); ++i) {
    if (scores[i] > scores[best]) {
      best = i;
      count = 1;
    } else if (scores[i] == scores[best]) {
      ++count;
    }
  }
  if (count != 1) return std::nullopt;
  return best;
}

}  // namespace duelbench
