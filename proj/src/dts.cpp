#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "duelbench/baselines.hpp"
#include "duelbench/error.hpp"

namespace duelbench {
namespace {

template <typename Score>
std::size_t argmax_random(std::size_t n, Rng& rng, Score score) {
  double best = -std::numeric_limits<double>::infinity();
  std::vector<std::size_t> ties;
  for (std::size_t i = 0; i < n; ++i) {
    const double s = score(i);
    if (std::isnan(s)) continue;
    if (s > best) {
      best = s;
      ties.assign(1, i);
    } else if (s == best) {
      ties.push_back(i);
    }
  }
  return ties.size() == 1 ? ties.front() : ties[uniform_index(rng, ties.size())];
}

}  // namespace

DtsPolicy::DtsPolicy(std::size_t k, double alpha, std::uint64_t seed)
    : alpha_(alpha), wins_(k), rng_(seed), theta_(k * k, 0.5) {
  if (k < 2) throw ValidationError("dts needs at least 2 arms");
  if (!(alpha > 0.5)) throw ValidationError("dts requires alpha > 0.5");
}

double DtsPolicy::sample_beta(std::uint64_t a_wins, std::uint64_t b_wins) {
  std::gamma_distribution<double> ga(static_cast<double>(a_wins) + 1.0, 1.0);
  std::gamma_distribution<double> gb(static_cast<double>(b_wins) + 1.0, 1.0);
  const double x = ga(rng_);
  const double y = gb(rng_);
  return x / (x + y);
}

ArmPair DtsPolicy::propose(std::uint64_t round) {
  if (awaiting_) throw RuntimeError("propose called twice without observe");
  const std::size_t k = wins_.arms();

  // Candidates: arms with the largest optimistic Copeland score.
  std::vector<std::size_t> upper_beats(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i != j && rucb_upper(wins_, i, j, alpha_, round) > 0.5) ++upper_beats[i];
    }
  }
  const std::size_t top = *std::max_element(upper_beats.begin(), upper_beats.end());

  // First sample: one posterior draw per pair.
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const double t = sample_beta(wins_.wins(i, j), wins_.wins(j, i));
      theta_[i * k + j] = t;
      theta_[j * k + i] = 1.0 - t;
    }
  }
  const std::size_t first = argmax_random(k, rng_, [&](std::size_t i) {
    if (upper_beats[i] != top) return std::numeric_limits<double>::quiet_NaN();
    std::size_t beats = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if (j != i && theta_[i * k + j] > 0.5) ++beats;
    }
    return static_cast<double>(beats);
  });

  // Second sample: the first arm's column, restricted to arms not already
  // known to lose against it.
  std::vector<double> challenger(k, std::numeric_limits<double>::quiet_NaN());
  for (std::size_t i = 0; i < k; ++i) {
    if (rucb_lower(wins_, i, first, alpha_, round) > 0.5) continue;
    challenger[i] = i == first ? 0.5 : sample_beta(wins_.wins(i, first), wins_.wins(first, i));
  }
  const std::size_t second =
      argmax_random(k, rng_, [&](std::size_t i) { return challenger[i]; });

  pending_ = {std::min(first, second), std::max(first, second)};
  awaiting_ = true;
  return pending_;
}

void DtsPolicy::observe(bool first_wins) {
  if (!awaiting_) throw RuntimeError("observe called without a pending proposal");
  if (first_wins) {
    wins_.record(pending_.first, pending_.second);
  } else {
    wins_.record(pending_.second, pending_.first);
  }
  awaiting_ = false;
}

}  // namespace duelbench
