#include "duelbench/baselines.hpp"

#include <algorithm>
#include <cmath>

#include "duelbench/error.hpp"

namespace duelbench {

std::size_t argmax_lowest(const std::vector<double>& values) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[best]) best = i;
  }
  return best;
}

std::size_t PairwiseWins::empirical_copeland_winner() const {
  std::vector<double> beats(k_, 0.0);
  for (std::size_t i = 0; i < k_; ++i) {
    for (std::size_t j = 0; j < k_; ++j) {
      if (i != j && wins(i, j) > wins(j, i)) beats[i] += 1.0;
    }
  }
  return argmax_lowest(beats);
}

double rucb_upper(const PairwiseWins& w, std::size_t i, std::size_t j, double alpha,
                  std::uint64_t t) {
  if (i == j) return 0.5;
  const std::uint64_t n = w.plays(i, j);
  if (n == 0) return 1.0;
  const double nd = static_cast<double>(n);
  return static_cast<double>(w.wins(i, j)) / nd +
         std::sqrt(alpha * std::log(static_cast<double>(t)) / nd);
}

double rucb_lower(const PairwiseWins& w, std::size_t i, std::size_t j, double alpha,
                  std::uint64_t t) {
  if (i == j) return 0.5;
  const std::uint64_t n = w.plays(i, j);
  if (n == 0) return 0.0;
  const double nd = static_cast<double>(n);
  return static_cast<double>(w.wins(i, j)) / nd -
         std::sqrt(alpha * std::log(static_cast<double>(t)) / nd);
}

std::vector<std::size_t> rucb_candidates(const PairwiseWins& w, double alpha,
                                         std::uint64_t t) {
  std::vector<std::size_t> out;
  const std::size_t k = w.arms();
  for (std::size_t c = 0; c < k; ++c) {
    bool ok = true;
    for (std::size_t j = 0; j < k && ok; ++j) ok = rucb_upper(w, c, j, alpha, t) >= 0.5;
    if (ok) out.push_back(c);
  }
  return out;
}

RucbPolicy::RucbPolicy(std::size_t k, double alpha, std::uint64_t seed)
    : alpha_(alpha), wins_(k), rng_(seed) {
  if (k < 2) throw ValidationError("rucb needs at least 2 arms");
  if (!(alpha > 0.5)) throw ValidationError("rucb requires alpha > 0.5");
}

ArmPair RucbPolicy::propose(std::uint64_t round) {
  if (awaiting_) throw RuntimeError("propose called twice without observe");
  const std::size_t k = wins_.arms();
  const std::vector<std::size_t> cands = rucb_candidates(wins_, alpha_, round);

  // Keep the remembered hypothesis only while it stays a candidate.
  if (!hypothesis_.empty() &&
      std::find(cands.begin(), cands.end(), hypothesis_.front()) == cands.end()) {
    hypothesis_.clear();
  }

  std::size_t first;
  if (cands.empty()) {
    first = uniform_index(rng_, k);
  } else if (cands.size() == 1) {
    hypothesis_ = cands;
    first = cands.front();
  } else if (!hypothesis_.empty() && uniform01(rng_) < 0.5) {
    // The hypothesis gets probability 1/2; the rest share the remainder.
    first = hypothesis_.front();
  } else {
    std::vector<std::size_t> others;
    for (std::size_t c : cands) {
      if (hypothesis_.empty() || c != hypothesis_.front()) others.push_back(c);
    }
    first = others[uniform_index(rng_, others.size())];
  }

  // Strongest optimistic challenger; the first arm itself only when it is
  // the sole candidate.
  const bool allow_self = cands.size() == 1 && cands.front() == first;
  double best = -1.0;
  std::vector<std::size_t> ties;
  for (std::size_t j = 0; j < k; ++j) {
    if (j == first && !allow_self) continue;
    const double u = rucb_upper(wins_, j, first, alpha_, round);
    if (u > best) {
      best = u;
      ties.assign(1, j);
    } else if (u == best) {
      ties.push_back(j);
    }
  }
  const std::size_t second = ties.size() == 1 ? ties.front() : ties[uniform_index(rng_, ties.size())];

  pending_ = {std::min(first, second), std::max(first, second)};
  awaiting_ = true;
  return pending_;
}

void RucbPolicy::observe(bool first_wins) {
  if (!awaiting_) throw RuntimeError("observe called without a pending proposal");
  if (first_wins) {
    wins_.record(pending_.first, pending_.second);
  } else {
    wins_.record(pending_.second, pending_.first);
  }
  awaiting_ = false;
}

}  // namespace duelbench
