#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "bcp/generators.hpp"
#include "bcp/io.hpp"
#include "bcp/partition_ep.hpp"
#include "bcp/partition_hypergraph.hpp"
#include "doctest.h"
#include "helpers.hpp"

using bcp::Graph;

namespace {

template <typename T, typename Ser, typename Par>
T round_trip(const T& value, Ser ser, Par par) {
  std::ostringstream out;
  ser(value, out);
  std::istringstream in(out.str());
  return par(in);
}

}  // namespace

TEST_SUITE_BEGIN("io");

TEST_CASE("graph round trip") {
  std::mt19937_64 rng(5150);
  for (int iter = 0; iter < 40; ++iter) {
    const uint32_t n = static_cast<uint32_t>(rng() % 80);
    const Graph g = bcp::gen_gnp(n, 0.25, rng());
    const Graph back = round_trip(g, bcp::serialize_graph, bcp::parse_graph);
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(oracle::graph_edges(back) == oracle::graph_edges(g));
  }
}

TEST_CASE("digraph round trip") {
  std::mt19937_64 rng(5151);
  for (int iter = 0; iter < 20; ++iter) {
    const bcp::Digraph g = bcp::gen_directed_gnp(40, 0.3, rng());
    const bcp::Digraph back = round_trip(g, bcp::serialize_digraph, bcp::parse_digraph);
    REQUIRE(back.vertex_count() == g.vertex_count());
    REQUIRE(back.arc_count() == g.arc_count());
    for (uint32_t u = 0; u < 40; ++u) {
      for (uint32_t v = 0; v < 40; ++v) {
        REQUIRE(back.has_arc(u, v) == g.has_arc(u, v));
      }
    }
  }
}

TEST_CASE("hypergraph round trip") {
  const bcp::Hypergraph h = bcp::gen_hypergraph(24, 4, 0.01, 8);
  const bcp::Hypergraph back =
      round_trip(h, bcp::serialize_hypergraph, bcp::parse_hypergraph);
  REQUIRE(back.vertex_count() == h.vertex_count());
  REQUIRE(back.uniformity() == h.uniformity());
  REQUIRE(back.edge_count() == h.edge_count());
  for (uint64_t e = 0; e < h.edge_count(); ++e) {
    const auto a = h.edge(e);
    const auto b = back.edge(e);
    REQUIRE(std::vector<uint32_t>(a.begin(), a.end()) ==
            std::vector<uint32_t>(b.begin(), b.end()));
  }
}

TEST_CASE("partition round trips preserve verification") {
  const Graph g = bcp::gen_gnp(120, 0.3, 17);
  const auto p = bcp::partition_ep(g);
  const auto back = round_trip(p, bcp::serialize_partition, bcp::parse_partition);
  CHECK(oracle::same_partition(p, back));
  CHECK(bcp::verify_partition(g, back).ok);

  const bcp::Hypergraph h = bcp::gen_hypergraph(20, 3, 0.05, 9);
  const auto dp = bcp::partition_stepup(h);
  const auto dback = round_trip(dp, bcp::serialize_dpartition, bcp::parse_dpartition);
  CHECK(oracle::same_dpartition(dp, dback));
  CHECK(bcp::verify_dpartition(h, dback).ok);
}

TEST_CASE("vertex set parsing") {
  std::istringstream in("3 1 4 1 5");
  CHECK(bcp::parse_vertex_set(in) == std::vector<uint32_t>{3, 1, 4, 1, 5});
  std::istringstream empty("");
  CHECK(bcp::parse_vertex_set(empty).empty());
  std::istringstream bad("2 x");
  CHECK_THROWS_AS(bcp::parse_vertex_set(bad), std::invalid_argument);
}

TEST_CASE("malformed graph inputs throw") {
  const char* cases[] = {
      "",                // no header
      "4",               // missing edge count
      "4 2\n0 1",        // truncated edge list
      "4 1\n0 4",        // endpoint out of range
      "4 1\n2 2",        // loop
      "4 1\n0 1\n0 2",   // trailing tokens
      "4 1\n0 one",      // non-numeric
      "-4 0",            // negative count
      "4 2\n0 1\n0 1",   // duplicate edge
  };
  for (const char* text : cases) {
    CAPTURE(text);
    std::istringstream in(text);
    CHECK_THROWS_AS(bcp::parse_graph(in), std::invalid_argument);
  }
}

TEST_CASE("malformed hypergraph and partition inputs throw") {
  {
    std::istringstream in("3 6 1\n0 0 2");  // repeated vertex in an edge
    CHECK_THROWS_AS(bcp::parse_hypergraph(in), std::invalid_argument);
  }
  {
    std::istringstream in("3 6 1\n2 1 0");  // ids not ascending
    CHECK_THROWS_AS(bcp::parse_hypergraph(in), std::invalid_argument);
  }
  {
    std::istringstream in("1 6 0");  // uniformity below 2
    CHECK_THROWS_AS(bcp::parse_hypergraph(in), std::invalid_argument);
  }
  {
    std::istringstream in("zp 4 1\n1 1 0 1");  // wrong tag
    CHECK_THROWS_AS(bcp::parse_partition(in), std::invalid_argument);
  }
  {
    std::istringstream in("bp 4 1\n1 1 0 0");  // sides overlap
    CHECK_THROWS_AS(bcp::parse_partition(in), std::invalid_argument);
  }
  {
    std::istringstream in("bp 4 1\n0 1 2");  // empty side
    CHECK_THROWS_AS(bcp::parse_partition(in), std::invalid_argument);
  }
  {
    std::istringstream in("dp 3 6 1\n1 1\n0\n1");  // wrong size-list length
    CHECK_THROWS_AS(bcp::parse_dpartition(in), std::invalid_argument);
  }
}

TEST_SUITE_END();
