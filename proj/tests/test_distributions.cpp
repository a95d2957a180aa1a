#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "bcp/distributions.hpp"
#include "doctest.h"

TEST_SUITE_BEGIN("distributions");

namespace {

uint64_t binom(uint64_t x, uint64_t y) {
  if (y > x) return 0;
  uint64_t c = 1;
  for (uint64_t i = 1; i <= y; ++i) c = c * (x - y + i) / i;
  return c;
}

uint64_t ipow(uint64_t b, uint32_t e) {
  uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

TEST_CASE("enumeration is complete, lexicographic, and correctly sized") {
  for (uint32_t d = 2; d <= 10; ++d) {
    const auto dists = bcp::enumerate_distributions(d);
    CHECK(dists.size() == binom(2 * d - 2, d - 2));
    for (size_t i = 0; i < dists.size(); ++i) {
      uint32_t sum = 0;
      for (uint32_t x : dists[i]) sum += x;
      CHECK(sum == d);
      CHECK(dists[i].size() == d - 1);
      if (i > 0) CHECK(dists[i - 1] < dists[i]);
    }
  }
}

TEST_CASE("multinomial base cases") {
  CHECK(bcp::multinomial(2, std::vector<uint32_t>{2}) == 1);
  CHECK(bcp::multinomial(3, std::vector<uint32_t>{1, 2}) == 3);
  CHECK(bcp::multinomial(4, std::vector<uint32_t>{2, 2}) == 6);
  CHECK(bcp::multinomial(4, std::vector<uint32_t>{0, 4}) == 1);
  CHECK(bcp::multinomial(5, std::vector<uint32_t>{1, 1, 3}) == 20);
}

TEST_CASE("multinomial identity holds exactly for d = 2..10") {
  for (uint32_t d = 2; d <= 10; ++d) CHECK(bcp::multinomial_identity_ok(d));
}

TEST_CASE("equitable strategy: legality and exact per-class mass") {
  for (uint32_t d = 2; d <= 10; ++d) {
    const auto s = bcp::make_equitable_strategy(d);
    REQUIRE(s.dists.size() == s.assign.size());
    std::map<uint32_t, uint64_t> mass;
    for (size_t i = 0; i < s.dists.size(); ++i) {
      const uint32_t f = s.assign[i];
      REQUIRE(f < d - 1);
      CHECK(s.dists[i][f] >= 2);
      mass[f] += bcp::multinomial(d, s.dists[i]);
    }
    for (uint32_t c = 0; c < d - 1; ++c) {
      CHECK(mass[c] == ipow(d - 1, d - 1));
    }
  }
}

TEST_CASE("strategy lookup finds every distribution and rejects others") {
  const auto s = bcp::make_equitable_strategy(4);
  for (size_t i = 0; i < s.dists.size(); ++i) {
    CHECK(s.index_of(s.dists[i]) == i);
  }
  CHECK_THROWS_AS(s.index_of(std::vector<uint32_t>{9, 9, 9}), std::invalid_argument);
}

TEST_SUITE_END();
