#include "duelbench/pair_index.hpp"

#include <string>

#include "duelbench/error.hpp"

namespace duelbench {

PairIndexMap::PairIndexMap(std::size_t k) : k_(k), kbar_(k * (k + 1) / 2) {
  if (k < 1) throw ValidationError("pair index map needs at least one arm");
}

std::size_t PairIndexMap::index(std::size_t i, std::size_t j) const {
  if (i > j) {
    throw ValidationError("pair (" + std::to_string(i) + "," + std::to_string(j) +
                          ") is not in canonical order");
  }
  if (j >= k_) throw ValidationError("arm " + std::to_string(j) + " out of range");
  return index_unchecked(i, j);
}

ArmPair PairIndexMap::pair(std::size_t idx) const {
  if (idx >= kbar_) {
    throw ValidationError("pair index " + std::to_string(idx) + " out of range");
  }
  // Row i starts at i*k - i*(i-1)/2 and holds k - i entries.
  std::size_t i = 0;
  std::size_t row_start = 0;
  while (idx >= row_start + (k_ - i)) {
    row_start += k_ - i;
    ++i;
  }
  return {i, i + (idx - row_start)};
}

}  // namespace duelbench
