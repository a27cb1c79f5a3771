#pragma once

#include <cstddef>
#include <cstdint>

#include "duelbench/preference_matrix.hpp"

namespace duelbench {

struct InstanceOptions {
  double min_gap = 0.0;
  std::size_t max_attempts = 10000;
};

/// Draws p[i][j] ~ U[0,1] for i < j and redraws the whole matrix until the
/// Copeland winner is unique, leads the runner-up by at least min_gap, and
/// no off-diagonal entry lies within 1e-9 of 0.5. Throws RuntimeError when
/// the attempt budget runs out.
PreferenceMatrix generate_random_instance(std::size_t k, std::uint64_t seed,
                                          const InstanceOptions& options = {});

}  // namespace duelbench
