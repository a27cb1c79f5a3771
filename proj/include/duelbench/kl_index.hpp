#pragma once

#include <cstdint>
#include <limits>

namespace duelbench {

inline constexpr double kInfiniteDivergence = std::numeric_limits<double>::infinity();

/// Bernoulli KL divergence p*ln(p/q) + (1-p)*ln((1-p)/(1-q)) with
/// 0*ln(0) = 0*ln(0/0) = 0 and x*ln(x/0) = +inf for x > 0. Returns
/// kInfiniteDivergence in the latter case. Throws ValidationError when an
/// argument is outside [0,1].
double kl_bernoulli(double p, double q);

/// Exploration budget for one arm of a KL-UCB index.
struct KlBudget {
  std::uint64_t n_pulls = 1;
  double mean = 0.0;
  double threshold = 0.0;
};

/// Largest q in [mean, 1] with n_pulls * KL(mean, q) <= threshold.
///
/// Bisection to 1e-9 (or 100 halvings); the lower endpoint is returned so
/// the budget inequality holds at the result. threshold == 0, mean == 1 and
/// mean == 0 are answered in closed form.
double kl_ucb_index(const KlBudget& budget);

/// Same as kl_ucb_index but without argument validation.
double kl_ucb_index_unchecked(std::uint64_t n_pulls, double mean, double threshold);

}  // namespace duelbench
