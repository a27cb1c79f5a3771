#pragma once

#include <cstddef>
#include <vector>

namespace duelbench {

/// Ground-truth duel probabilities. at(i, j) is the probability that arm i
/// is preferred over arm j. Construction enforces at(i, j) + at(j, i) == 1
/// exactly and a diagonal of exactly 0.5.
class PreferenceMatrix {
 public:
  static constexpr double kTolerance = 1e-12;

  /// Validates a raw row-major matrix and symmetrizes it from the upper
  /// triangle. Throws ValidationError on any violated invariant.
  static PreferenceMatrix validate(const std::vector<std::vector<double>>& raw);

  /// Builds from the strict upper triangle (row-major, i < j), mirroring the
  /// lower triangle. Entries must lie in [0,1].
  static PreferenceMatrix from_upper_triangle(std::size_t k, const std::vector<double>& upper);

  std::size_t size() const { return k_; }
  double at(std::size_t i, std::size_t j) const { return p_[i * k_ + j]; }
  std::vector<std::vector<double>> rows() const;

  friend bool operator==(const PreferenceMatrix&, const PreferenceMatrix&) = default;

 private:
  PreferenceMatrix(std::size_t k, std::vector<double> p) : k_(k), p_(std::move(p)) {}

  std::size_t k_;
  std::vector<double> p_;
};

}  // namespace duelbench
