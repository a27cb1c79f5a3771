#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "duelbench/error.hpp"
#include "duelbench/instance.hpp"
#include "duelbench/preference_matrix.hpp"
#include "duelbench/scores.hpp"

using namespace duelbench;

namespace {

PreferenceMatrix from_upper(std::size_t k, std::vector<double> upper) {
  return PreferenceMatrix::from_upper_triangle(k, upper);
}

// Arm 0 beats 1 and 2, arm 1 beats 2.
PreferenceMatrix transitive3() { return from_upper(3, {0.8, 0.9, 0.6}); }

// 0 beats 1, 1 beats 2, 2 beats 0.
PreferenceMatrix cyclic3() { return from_upper(3, {0.8, 0.3, 0.7}); }

std::vector<double> random_upper(std::size_t k, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> up(k * (k - 1) / 2);
  for (double& x : up) x = u(rng);
  return up;
}

}  // namespace

TEST_CASE("validate_preference_matrix accepts and symmetrizes") {
  const auto pm = PreferenceMatrix::validate({{0.5, 0.7}, {0.3, 0.5}});
  CHECK(pm.size() == 2);
  CHECK(pm.at(0, 1) == 0.7);
  CHECK(pm.at(1, 0) == 1.0 - 0.7);
  CHECK(pm.at(0, 0) == 0.5);

  // Within tolerance: the lower triangle is rebuilt from the upper one.
  const auto near = PreferenceMatrix::validate({{0.5, 0.7}, {0.3 + 1e-13, 0.5}});
  CHECK(near.at(1, 0) == 1.0 - 0.7);
  CHECK(near.at(0, 1) + near.at(1, 0) == 1.0);
}

TEST_CASE("validate_preference_matrix rejects malformed input") {
  CHECK_THROWS_AS(PreferenceMatrix::validate({{0.5}}), ValidationError);
  CHECK_THROWS_AS(PreferenceMatrix::validate({{0.5, 0.7}, {0.4, 0.5}}), ValidationError);
  CHECK_THROWS_AS(PreferenceMatrix::validate({{0.5, 0.7}, {0.3}}), ValidationError);
  CHECK_THROWS_AS(PreferenceMatrix::validate({{0.5, 1.2}, {-0.2, 0.5}}), ValidationError);
  CHECK_THROWS_AS(PreferenceMatrix::validate({{0.6, 0.7}, {0.3, 0.5}}), ValidationError);
  CHECK_THROWS_AS(PreferenceMatrix::validate({{0.5, 0.7, 0.5}, {0.3, 0.5, 0.5}}), ValidationError);
}

TEST_CASE("copeland_scores") {
  SUBCASE("transitive") {
    const auto s = copeland_scores(transitive3());
    CHECK(s.values == oracle::copeland_by_pairs(transitive3()));
    CHECK(s.values == std::vector<double>{1.0, 0.5, 0.0});
    CHECK(s.kind == ScoreKind::kCopeland);
  }
  SUBCASE("cyclic") {
    const auto s = copeland_scores(cyclic3());
    CHECK(s.values == oracle::copeland_by_pairs(cyclic3()));
    CHECK(s.values == std::vector<double>{0.5, 0.5, 0.5});
  }
  SUBCASE("all ties count as zero") {
    const auto s = copeland_scores(from_upper(4, std::vector<double>(6, 0.5)));
    CHECK(s.values == std::vector<double>(4, 0.0));
  }
}

TEST_CASE("copeland_scores agree with pair enumeration and are multiples of 1/(K-1)") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = 2 + trial % 9;
    const auto pm = from_upper(k, random_upper(k, rng));
    const auto s = copeland_scores(pm);
    CHECK(s.values == oracle::copeland_by_pairs(pm));
    for (double v : s.values) {
      const double units = v * static_cast<double>(k - 1);
      CHECK(units == std::round(units));
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    }
  }
}

TEST_CASE("copeland_scores are invariant under relabeling") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t k = 3 + trial % 6;
    const auto pm = from_upper(k, random_upper(k, rng));
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::vector<double>> raw(k, std::vector<double>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) raw[perm[i]][perm[j]] = pm.at(i, j);
    const auto permuted = PreferenceMatrix::validate(raw);
    const auto a = copeland_scores(pm);
    const auto b = copeland_scores(permuted);
    for (std::size_t i = 0; i < k; ++i) CHECK(b[perm[i]] == a[i]);
  }
}

TEST_CASE("max Copeland score is 1 exactly when a Condorcet winner exists") {
  for (std::size_t k = 2; k <= 4; ++k) {
    const std::size_t pairs = k * (k - 1) / 2;
    for (std::size_t mask = 0; mask < (std::size_t{1} << pairs); ++mask) {
      std::vector<double> up(pairs);
      for (std::size_t b = 0; b < pairs; ++b) up[b] = (mask >> b) & 1 ? 0.7 : 0.3;
      const auto pm = from_upper(k, up);
      bool condorcet = false;
      for (std::size_t i = 0; i < k; ++i) {
        bool all = true;
        for (std::size_t j = 0; j < k; ++j) all = all && (i == j || pm.at(i, j) > 0.5);
        condorcet = condorcet || all;
      }
      const auto s = copeland_scores(pm);
      const double top = *std::max_element(s.values.begin(), s.values.end());
      CHECK((top == 1.0) == condorcet);
    }
  }
}

TEST_CASE("borda_scores include the self term") {
  const auto two = borda_scores(PreferenceMatrix::validate({{0.5, 0.7}, {0.3, 0.5}}));
  CHECK(two.values[0] == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(two.values[1] == doctest::Approx(0.4).epsilon(1e-15));
  CHECK(two.kind == ScoreKind::kBorda);

  const auto flat = borda_scores(from_upper(4, std::vector<double>(6, 0.5)));
  CHECK(flat.values == std::vector<double>(4, 0.5));

  const auto row = borda_scores(from_upper(3, {1.0, 1.0, 0.5}));
  CHECK(row.values[0] == doctest::Approx(2.5 / 3.0).epsilon(1e-15));
}

TEST_CASE("normalize_scores") {
  const std::vector<double> h{0, 5, 10};
  CHECK(normalize_scores({h, 0, 10, Direction::kMaximize}).values ==
        std::vector<double>{0.0, 0.5, 1.0});
  CHECK(normalize_scores({h, 0, 10, Direction::kMinimize}).values ==
        std::vector<double>{1.0, 0.5, 0.0});
  const auto flat = normalize_scores({{3, 3, 3}, 0, 10, Direction::kMaximize});
  for (double v : flat.values) CHECK(v == doctest::Approx(0.3));
  CHECK_THROWS_AS(normalize_scores({h, 10, 10}), ValidationError);
  CHECK_THROWS_AS(normalize_scores({h, 10, 0}), ValidationError);
  CHECK_THROWS_AS(normalize_scores({{11}, 0, 10}), ValidationError);
}

TEST_CASE("normalize_scores preserves the winning index") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-5.0, 20.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> h(2 + trial % 10);
    for (double& x : h) x = u(rng);
    const double lo = *std::min_element(h.begin(), h.end()) - 1.0;
    const double hi = *std::max_element(h.begin(), h.end()) + 1.0;
    const auto up = normalize_scores({h, lo, hi, Direction::kMaximize});
    const auto down = normalize_scores({h, lo, hi, Direction::kMinimize});
    const auto argmax = [](const std::vector<double>& v) {
      return static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
    };
    const auto argmin = static_cast<std::size_t>(std::min_element(h.begin(), h.end()) - h.begin());
    CHECK(argmax(up.values) == argmax(h));
    CHECK(argmax(down.values) == argmin);
    for (double v : up.values) CHECK((v >= 0.0 && v <= 1.0));
  }
}

TEST_CASE("unique_winner") {
  CHECK(unique_winner({{1.0, 0.5, 0.0}}) == std::optional<std::size_t>(0));
  CHECK_FALSE(unique_winner({{0.5, 0.5, 0.5}}).has_value());
  CHECK_FALSE(unique_winner({{0.9, 0.9, 0.1}}).has_value());
  CHECK(unique_winner({{0.1, 0.2, 0.9}}) == std::optional<std::size_t>(2));
}

TEST_CASE("generate_random_instance") {
  SUBCASE("postconditions hold over many seeds") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const std::size_t k = 3 + seed % 8;
      const auto pm = generate_random_instance(k, seed);
      const auto s = copeland_scores(pm);
      CHECK(unique_winner(s).has_value());
      for (std::size_t i = 0; i < k; ++i) {
        CHECK(pm.at(i, i) == 0.5);
        for (std::size_t j = 0; j < k; ++j) {
          CHECK(pm.at(i, j) + pm.at(j, i) == 1.0);
          if (i != j) CHECK(std::abs(pm.at(i, j) - 0.5) >= 1e-9);
        }
      }
    }
  }
  SUBCASE("min_gap is respected") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const auto s = copeland_scores(generate_random_instance(5, seed, {0.25}));
      auto v = s.values;
      std::sort(v.rbegin(), v.rend());
      CHECK(v[0] - v[1] >= 0.25);
    }
  }
  SUBCASE("deterministic per seed") {
    CHECK(generate_random_instance(7, 99) == generate_random_instance(7, 99));
    CHECK_FALSE(generate_random_instance(7, 99) == generate_random_instance(7, 100));
  }
  SUBCASE("infeasible gap exhausts the budget") {
    // Independent measurement: among 10,000 i.i.d. uniform K=5 matrices, none
    // has a Copeland lead of 0.9 (the runner-up always wins at least two of
    // the six duels among the other four arms).
    std::mt19937_64 rng(5);
    int accepted = 0;
    for (int d = 0; d < 10000; ++d) {
      auto v = oracle::copeland_by_pairs(from_upper(5, random_upper(5, rng)));
      std::sort(v.rbegin(), v.rend());
      accepted += v[0] - v[1] >= 0.9;
    }
    CHECK(accepted == 0);
    CHECK_THROWS_AS(generate_random_instance(5, 1, {0.9, 50}), RuntimeError);
  }
  SUBCASE("argument checks") {
    CHECK_THROWS_AS(generate_random_instance(2, 1), ValidationError);
    CHECK_THROWS_AS(generate_random_instance(5, 1, {1.0}), ValidationError);
    CHECK_THROWS_AS(generate_random_instance(5, 1, {-0.1}), ValidationError);
  }
}
