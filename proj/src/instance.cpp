#include "duelbench/instance.hpp"

#include <algorithm>
#include <cmath>

#include "duelbench/error.hpp"
#include "duelbench/rng.hpp"
#include "duelbench/scores.hpp"

namespace duelbench {
namespace {

constexpr double kHalfExclusion = 1e-9;

bool acceptable(const PreferenceMatrix& pm, double min_gap) {
  const ScoreVector scores = copeland_scores(pm);
  if (!unique_winner(scores)) return false;
  std::vector<double> sorted = scores.values;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  return sorted[0] - sorted[1] >= min_gap;
}

}  // namespace

PreferenceMatrix generate_random_instance(std::size_t k, std::uint64_t seed,
                                          const InstanceOptions& options) {
  if (k < 3) throw ValidationError("random instances need at least 3 arms");
  if (!(options.min_gap >= 0.0 && options.min_gap < 1.0)) {
    throw ValidationError("min_gap must lie in [0, 1)");
  }
  Rng rng(seed);
  std::vector<double> upper(k * (k - 1) / 2);
  for (std::size_t attempt = 0; attempt < options.max_attempts; ++attempt) {
    bool near_half = false;
    for (double& x : upper) {
      x = uniform01(rng);
      near_half = near_half || std::abs(x - 0.5) < kHalfExclusion;
    }
    if (near_half) continue;
    PreferenceMatrix pm = PreferenceMatrix::from_upper_triangle(k, upper);
    if (acceptable(pm, options.min_gap)) return pm;
  }
  throw RuntimeError("no instance with k=" + std::to_string(k) + " and min_gap=" +
                     std::to_string(options.min_gap) + " found in " +
                     std::to_string(options.max_attempts) + " attempts");
}

}  // namespace duelbench
