#include "duelbench/kl_index.hpp"

#include <cmath>

#include "duelbench/error.hpp"

namespace duelbench {
namespace {

constexpr double kBisectionTolerance = 1e-9;
constexpr int kMaxBisections = 100;

// x * ln(x / y) with the boundary conventions.
double xlogx_over_y(double x, double y) {
  if (x == 0.0) return 0.0;
  if (y == 0.0) return kInfiniteDivergence;
  return x * std::log(x / y);
}

double kl_unchecked(double p, double q) {
  const double d = xlogx_over_y(p, q) + xlogx_over_y(1.0 - p, 1.0 - q);
  // Rounding can push d slightly below zero near p == q.
  return d > 0.0 ? d : 0.0;
}

}  // namespace

double kl_bernoulli(double p, double q) {
  if (!(p >= 0.0 && p <= 1.0) || !(q >= 0.0 && q <= 1.0)) {
    throw ValidationError("kl_bernoulli arguments must lie in [0,1]");
  }
  return kl_unchecked(p, q);
}

double kl_ucb_index_unchecked(std::uint64_t n_pulls, double mean, double threshold) {
  if (threshold == 0.0) return mean;
  if (mean >= 1.0) return 1.0;
  const double n = static_cast<double>(n_pulls);
  if (mean <= 0.0) return -std::expm1(-threshold / n);

  const double budget = threshold / n;
  double lo = mean;
  double hi = 1.0;
  for (int it = 0; it < kMaxBisections && hi - lo > kBisectionTolerance; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (kl_unchecked(mean, mid) <= budget) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

double kl_ucb_index(const KlBudget& budget) {
  if (budget.n_pulls < 1) throw ValidationError("kl_ucb_index needs n_pulls >= 1");
  if (!(budget.mean >= 0.0 && budget.mean <= 1.0)) {
    throw ValidationError("kl_ucb_index mean must lie in [0,1]");
  }
  if (!(budget.threshold >= 0.0) || std::isinf(budget.threshold)) {
    throw ValidationError("kl_ucb_index threshold must be finite and nonnegative");
  }
  return kl_ucb_index_unchecked(budget.n_pulls, budget.mean, budget.threshold);
}

}  // namespace duelbench
