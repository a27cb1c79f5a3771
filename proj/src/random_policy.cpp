#include "duelbench/baselines.hpp"
#include "duelbench/error.hpp"

namespace duelbench {

RandomPolicy::RandomPolicy(std::size_t k, std::uint64_t seed) : map_(k), wins_(k), rng_(seed) {
  if (k < 2) throw ValidationError("random policy needs at least 2 arms");
}

ArmPair RandomPolicy::propose(std::uint64_t /*round*/) {
  if (awaiting_) throw RuntimeError("propose called twice without observe");
  pending_ = map_.pair(uniform_index(rng_, map_.pairs()));
  awaiting_ = true;
  return pending_;
}

void RandomPolicy::observe(bool first_wins) {
  if (!awaiting_) throw RuntimeError("observe called without a pending proposal");
  if (first_wins) {
    wins_.record(pending_.first, pending_.second);
  } else {
    wins_.record(pending_.second, pending_.first);
  }
  awaiting_ = false;
}

}  // namespace duelbench
