#pragma once

#include <cstddef>
#include <utility>

namespace duelbench {

struct ArmPair {
  std::size_t first = 0;
  std::size_t second = 0;

  friend bool operator==(const ArmPair&, const ArmPair&) = default;
};

/// Bijection between unordered arm pairs {(i, j) : i <= j} and flat indices
/// [0, k(k+1)/2). Layout is row-major over the upper triangle including the
/// diagonal, zero-based:
///
///   index(i, j) = i*k - i*(i-1)/2 + (j - i)
///
/// For k = 3: (0,0)->0 (0,1)->1 (0,2)->2 (1,1)->3 (1,2)->4 (2,2)->5.
/// Adding one to both arms and the index gives the one-based form
/// (i-1)*k - (i-1)*(i-2)/2 + (j-i+1) used in exported logs.
class PairIndexMap {
 public:
  explicit PairIndexMap(std::size_t k);

  std::size_t arms() const { return k_; }
  std::size_t pairs() const { return kbar_; }

  /// Requires i <= j < k; throws ValidationError otherwise. Callers
  /// canonicalize (j, i) to (i, j).
  std::size_t index(std::size_t i, std::size_t j) const;
  std::size_t index(ArmPair p) const { return index(p.first, p.second); }

  /// Exact inverse of index(); throws ValidationError when idx >= pairs().
  ArmPair pair(std::size_t idx) const;

  /// Unchecked forward map for hot loops.
  std::size_t index_unchecked(std::size_t i, std::size_t j) const {
    return i * k_ - i * (i - 1) / 2 + (j - i);
  }

 private:
  std::size_t k_;
  std::size_t kbar_;
};

}  // namespace duelbench
