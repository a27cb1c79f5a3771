#include "duelbench/preference_matrix.hpp"

#include <cmath>
#include <sstream>

#include "duelbench/error.hpp"

namespace duelbench {
namespace {

std::string where(std::size_t i, std::size_t j) {
  std::ostringstream os;
  os << "(" << i << "," << j << ")";
  return os.str();
}

bool in_unit(double x) { return x >= 0.0 && x <= 1.0; }

}  // namespace

PreferenceMatrix PreferenceMatrix::validate(const std::vector<std::vector<double>>& raw) {
  const std::size_t k = raw.size();
  if (k < 2) throw ValidationError("preference matrix needs at least 2 arms");
  for (std::size_t i = 0; i < k; ++i) {
    if (raw[i].size() != k) {
      throw ValidationError("preference matrix is not square: row " + std::to_string(i) +
                            " has " + std::to_string(raw[i].size()) + " entries, expected " +
                            std::to_string(k));
    }
  }
  std::vector<double> p(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const double x = raw[i][j];
      if (!in_unit(x)) throw ValidationError("entry " + where(i, j) + " outside [0,1]");
      if (i == j && std::abs(x - 0.5) > kTolerance) {
        throw ValidationError("diagonal entry " + where(i, i) + " is not 0.5");
      }
      if (i < j && std::abs(x + raw[j][i] - 1.0) > kTolerance) {
        throw ValidationError("entries " + where(i, j) + " and " + where(j, i) +
                              " do not sum to 1");
      }
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    p[i * k + i] = 0.5;
    for (std::size_t j = i + 1; j < k; ++j) {
      p[i * k + j] = raw[i][j];
      p[j * k + i] = 1.0 - raw[i][j];
    }
  }
  return PreferenceMatrix(k, std::move(p));
}

PreferenceMatrix PreferenceMatrix::from_upper_triangle(std::size_t k,
                                                       const std::vector<double>& upper) {
  if (k < 2) throw ValidationError("preference matrix needs at least 2 arms");
  if (upper.size() != k * (k - 1) / 2) {
    throw ValidationError("upper triangle has wrong length");
  }
  std::vector<double> p(k * k);
  std::size_t c = 0;
  for (std::size_t i = 0; i < k; ++i) {
    p[i * k + i] = 0.5;
    for (std::size_t j = i + 1; j < k; ++j, ++c) {
      if (!in_unit(upper[c])) throw ValidationError("entry " + where(i, j) + " outside [0,1]");
      p[i * k + j] = upper[c];
      p[j * k + i] = 1.0 - upper[c];
    }
  }
  return PreferenceMatrix(k, std::move(p));
}

std::vector<std::vector<double>> PreferenceMatrix::rows() const {
  std::vector<std::vector<double>> out(k_, std::vector<double>(k_));
  for (std::size_t i = 0; i < k_; ++i)
    for (std::size_t j = 0; j < k_; ++j) out[i][j] = at(i, j);
  return out;
}

}  // namespace duelbench
