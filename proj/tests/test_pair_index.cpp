#include <set>

#include "doctest.h"

#include "duelbench/error.hpp"
#include "duelbench/pair_index.hpp"

using namespace duelbench;

namespace {

// One-based view used by exported logs.
std::size_t one_based(const PairIndexMap& m, std::size_t i, std::size_t j) {
  return m.index(i - 1, j - 1) + 1;
}

}  // namespace

TEST_CASE("k = 3 layout") {
  const PairIndexMap m(3);
  CHECK(m.pairs() == 6);
  CHECK(one_based(m, 1, 1) == 1);
  CHECK(one_based(m, 1, 2) == 2);
  CHECK(one_based(m, 1, 3) == 3);
  CHECK(one_based(m, 2, 2) == 4);
  CHECK(one_based(m, 2, 3) == 5);
  CHECK(one_based(m, 3, 3) == 6);

  CHECK(m.pair(5 - 1) == ArmPair{1, 2});
  CHECK(m.pair(1 - 1) == ArmPair{0, 0});
  CHECK_THROWS_AS(m.pair(7 - 1), ValidationError);
}

TEST_CASE("k = 2 layout") {
  const PairIndexMap m(2);
  CHECK(m.pairs() == 3);
  CHECK(one_based(m, 2, 2) == 3);
}

TEST_CASE("closed form matches the documented one-based formula") {
  for (std::size_t k = 2; k <= 20; ++k) {
    const PairIndexMap m(k);
    for (std::size_t i = 1; i <= k; ++i) {
      for (std::size_t j = i; j <= k; ++j) {
        const std::size_t expected = (i - 1) * k - (i - 1) * (i - 2) / 2 + (j - i + 1);
        CHECK(one_based(m, i, j) == expected);
      }
    }
  }
}

TEST_CASE("non-canonical or out-of-range pairs are rejected") {
  const PairIndexMap m(4);
  CHECK_THROWS_AS(m.index(2, 1), ValidationError);
  CHECK_THROWS_AS(m.index(0, 4), ValidationError);
  CHECK_THROWS_AS(m.pair(10), ValidationError);
}

TEST_CASE("round trip and surjectivity for k in 2..64") {
  for (std::size_t k = 2; k <= 64; ++k) {
    const PairIndexMap m(k);
    REQUIRE(m.pairs() == k * (k + 1) / 2);
    std::set<std::size_t> image;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i; j < k; ++j) {
        const std::size_t idx = m.index(i, j);
        CHECK(idx < m.pairs());
        image.insert(idx);
        CHECK(m.pair(idx) == ArmPair{i, j});
      }
    }
    CHECK(image.size() == m.pairs());
    for (std::size_t idx = 0; idx < m.pairs(); ++idx) {
      const ArmPair p = m.pair(idx);
      CHECK(p.first <= p.second);
      CHECK(m.index(p) == idx);
    }
  }
}
