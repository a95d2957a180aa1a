#include <cstdint>
#include <vector>

#include "bcp/entropy.hpp"
#include "bcp/generators.hpp"
#include "bcp/partition.hpp"
#include "bcp/partition_density.hpp"
#include "bcp/partition_ep.hpp"
#include "doctest.h"
#include "helpers.hpp"

using bcp::Graph;

TEST_SUITE_BEGIN("partition_density");

TEST_CASE("random matrix across densities: exact partition and determinism") {
  uint64_t seed = 9000;
  for (uint32_t n : {1u, 2u, 3u, 4u, 5u, 8u, 9u, 33u, 100u, 257u, 600u}) {
    for (double p : {0.0, 0.02, 0.1, 0.3, 0.7, 0.97, 1.0}) {
      const Graph g = bcp::gen_gnp(n, p, seed++);
      const auto part = bcp::partition_density(g);
      REQUIRE(oracle::partitions_exactly(g, part));
      CHECK(bcp::verify_partition(g, part).ok);
      CHECK(oracle::same_partition(part, bcp::partition_density(g)));
    }
  }
}

TEST_CASE("exact edge-count inputs partition exactly") {
  for (const auto& [n, m] : std::vector<std::pair<uint32_t, uint64_t>>{
           {50, 0}, {50, 1}, {50, 300}, {50, 1225}, {400, 15000}}) {
    const Graph g = bcp::gen_gnm(n, m, 31 + m);
    CHECK(bcp::verify_partition(g, bcp::partition_density(g)).ok);
  }
}

TEST_CASE("degenerate paths: empty, complete, tiny") {
  const Graph empty(10, {});
  CHECK(bcp::partition_density(empty).items.empty());

  const Graph k16 = bcp::gen_gnp(16, 1.0, 0);
  const auto per_edge = bcp::partition_density(k16);
  CHECK(per_edge.items.size() == k16.edge_count());
  CHECK(bcp::weight(per_edge) == 2 * k16.edge_count());
  CHECK(bcp::verify_partition(k16, per_edge).ok);

  const Graph tri(3, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(bcp::partition_density(tri).items.size() == 3);
}

TEST_CASE("calibrated part size stays in range and beats the trivial sizes on record") {
  for (uint32_t n : {16u, 256u, 4096u, 1u << 14}) {
    for (double gamma : {0.05, 0.1, 0.25, 0.5, 0.8}) {
      const uint32_t r = bcp::density_part_size(n, gamma);
      CHECK(r >= 2);
      CHECK(r <= n);
      // The chosen size is no worse than the model at nearby sizes.
      const double at = bcp::density_expected_weight(n, gamma, r);
      if (r > 2) CHECK(at <= bcp::density_expected_weight(n, gamma, r - 1));
      CHECK(at <= bcp::density_expected_weight(n, gamma, r + 1));
    }
  }
}

TEST_CASE("model tracks measured weight at moderate scale") {
  const uint32_t n = 4096;
  const double gamma = 0.25;
  const uint64_t m = static_cast<uint64_t>(gamma * n * (n - 1) / 2);
  const Graph g = bcp::gen_gnm(n, m, 77);
  const auto part = bcp::partition_density(g);
  REQUIRE(bcp::verify_partition(g, part).ok);
  const double predicted =
      bcp::density_expected_weight(n, gamma, bcp::density_part_size(n, gamma));
  const double measured = static_cast<double>(bcp::weight(part));
  CHECK(measured == doctest::Approx(predicted).epsilon(0.30));
}

TEST_CASE("density construction undercuts the fixed-size partitioner on sparse inputs") {
  const uint32_t n = 4096;
  const Graph g = bcp::gen_gnp(n, 0.1, 123);
  const uint64_t w_density = bcp::weight(bcp::partition_density(g));
  const uint64_t w_ep = bcp::weight(bcp::partition_ep(g));
  CHECK(w_density < w_ep);
}

TEST_SUITE_END();
