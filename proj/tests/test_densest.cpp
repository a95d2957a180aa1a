#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "bcp/densest.hpp"
#include "bcp/generators.hpp"
#include "bcp/partition_ep.hpp"
#include "bcp/rational.hpp"
#include "bcp/representation.hpp"
#include "doctest.h"
#include "helpers.hpp"

using bcp::CBRepr;
using bcp::DensestResult;
using bcp::Graph;
using bcp::Rational;

namespace {

CBRepr compact_of(const Graph& g) { return CBRepr(bcp::build_sb(bcp::partition_ep(g))); }

// delta >= delta* / (2 alpha), compared exactly; two_alpha must be integral.
bool meets_guarantee(const Rational& got, const Rational& best, uint64_t two_alpha) {
  using u128 = unsigned __int128;
  return static_cast<u128>(got.num) * best.den * two_alpha >=
         static_cast<u128>(best.num) * got.den;
}

uint32_t round_cap(uint32_t n, double alpha) {
  // ceil(log_alpha n) + 1 via repeated multiplication.
  uint32_t k = 0;
  double t = 1.0;
  while (t < static_cast<double>(n)) {
    t *= alpha;
    ++k;
  }
  return k + 1;
}

}  // namespace

TEST_SUITE_BEGIN("densest");

TEST_CASE("triangle trace at alpha 2") {
  const Graph g(3, {{0, 1}, {0, 2}, {1, 2}});
  const DensestResult res = bcp::densest_approx(compact_of(g), 2.0);
  CHECK(res.density == Rational(1, 1));
  CHECK(res.vertices == std::vector<uint32_t>{0, 1, 2});
  CHECK(res.rounds == 3);
  CHECK(res.thresholds == std::vector<double>{1.0, 2.0, 4.0});
}

TEST_CASE("star keeps the leaves") {
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (uint32_t v = 1; v < 10; ++v) edges.push_back({0, v});
  const Graph g(10, edges);
  const DensestResult res = bcp::densest_approx(compact_of(g), 2.0);
  // Whole star is the best reading: 9/10 beats the bare center.
  CHECK(res.density == Rational(9, 10));
  CHECK(res.vertices.size() == 10);
}

TEST_CASE("degenerate inputs") {
  const Graph empty(0, {});
  const DensestResult r0 = bcp::densest_approx(compact_of(empty), 2.0);
  CHECK(r0.density == Rational(0, 1));
  CHECK(r0.vertices.empty());
  CHECK(r0.rounds == 0);

  const Graph edgeless(5, {});
  const DensestResult r1 = bcp::densest_approx(compact_of(edgeless), 2.0);
  CHECK(r1.density == Rational(0, 1));
  CHECK(r1.vertices.empty());
  CHECK(r1.rounds == 1);
}

TEST_CASE("alpha must exceed one") {
  const Graph g(3, {{0, 1}});
  CHECK_THROWS_AS(bcp::densest_approx(compact_of(g), 1.0), std::invalid_argument);
  CHECK_THROWS_AS(bcp::densest_approx(compact_of(g), 0.5), std::invalid_argument);
}

TEST_CASE("guarantee against the exhaustive oracle") {
  // 2 alpha in {3, 4, 8} keeps the bound comparison exact.
  const std::pair<double, uint64_t> alphas[] = {{1.5, 3}, {2.0, 4}, {4.0, 8}};

  // Every graph on up to 5 vertices.
  for (uint32_t n = 1; n <= 5; ++n) {
    const auto universe = oracle::pair_universe(n);
    for (uint64_t mask = 0; mask < (uint64_t{1} << universe.size()); ++mask) {
      const Graph g = oracle::graph_from_mask(n, universe, mask);
      const Rational best = oracle::densest_exact(g);
      const CBRepr cb = compact_of(g);
      for (const auto& [alpha, two_alpha] : alphas) {
        const DensestResult res = bcp::densest_approx(cb, alpha);
        REQUIRE(meets_guarantee(res.density, best, two_alpha));
        REQUIRE(res.rounds <= round_cap(n, alpha));
      }
    }
  }

  // Sampled midsize instances; witness density re-checked edge by edge.
  std::mt19937_64 rng(424242);
  for (int iter = 0; iter < 300; ++iter) {
    const uint32_t n = 6 + static_cast<uint32_t>(rng() % 7);
    const double p = (iter % 3 == 0) ? 0.2 : (iter % 3 == 1 ? 0.5 : 0.8);
    const Graph g = bcp::gen_gnp(n, p, rng());
    const Rational best = oracle::densest_exact(g);
    const oracle::DenseGraph dense(g);
    const CBRepr cb = compact_of(g);
    for (const auto& [alpha, two_alpha] : alphas) {
      const DensestResult res = bcp::densest_approx(cb, alpha);
      REQUIRE(meets_guarantee(res.density, best, two_alpha));
      REQUIRE(res.rounds <= round_cap(n, alpha));
      REQUIRE(res.thresholds.size() == res.rounds);
      if (res.density.num > 0) {
        uint64_t inside = 0;
        for (size_t i = 0; i < res.vertices.size(); ++i) {
          for (size_t j = i + 1; j < res.vertices.size(); ++j) {
            inside += dense.edge(res.vertices[i], res.vertices[j]);
          }
        }
        REQUIRE(res.density == Rational(inside, res.vertices.size()));
      }
      // The whole-graph reading happens in round one, so the best reading
      // is never below the global density.
      if (n > 0 && g.edge_count() > 0) {
        REQUIRE(!(res.density < Rational(g.edge_count(), n)));
      }
    }
  }
}

TEST_SUITE_END();
