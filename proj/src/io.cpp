#include "bcp/io.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace bcp {

namespace {

uint64_t read_u64(std::istream& in, const char* what) {
  uint64_t v;
  if (!(in >> v)) {
    throw std::invalid_argument(std::string("parse: expected ") + what);
  }
  return v;
}

uint32_t read_u32(std::istream& in, const char* what) {
  const uint64_t v = read_u64(in, what);
  if (v > std::numeric_limits<uint32_t>::max()) {
    throw std::invalid_argument(std::string("parse: value too large for ") + what);
  }
  return static_cast<uint32_t>(v);
}

void expect_tag(std::istream& in, const char* tag) {
  std::string s;
  if (!(in >> s) || s != tag) {
    throw std::invalid_argument(std::string("parse: expected header tag ") + tag);
  }
}

void expect_end(std::istream& in) {
  std::string s;
  if (in >> s) throw std::invalid_argument("parse: trailing content after object");
}

// Counts come from untrusted input; never preallocate more than this.
constexpr uint64_t kReserveCap = uint64_t{1} << 20;

// Reads one sorted-strictly-increasing id list of known size.
std::vector<uint32_t> read_side(std::istream& in, uint32_t size, uint32_t n) {
  if (size == 0) throw std::invalid_argument("parse: empty member side/part");
  std::vector<uint32_t> out;
  out.reserve(size);
  for (uint32_t i = 0; i < size; ++i) {
    const uint32_t v = read_u32(in, "vertex id");
    if (v >= n) throw std::invalid_argument("parse: vertex id out of range");
    if (!out.empty() && out.back() >= v) {
      throw std::invalid_argument("parse: ids must strictly increase");
    }
    out.push_back(v);
  }
  return out;
}

void check_disjoint(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  for (size_t x = 0, y = 0; x < a.size() && y < b.size();) {
    if (a[x] == b[y]) throw std::invalid_argument("parse: sides must be disjoint");
    a[x] < b[y] ? ++x : ++y;
  }
}

std::vector<std::pair<uint32_t, uint32_t>> read_pairs(std::istream& in, uint64_t m) {
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  edges.reserve(std::min(m, kReserveCap));
  for (uint64_t i = 0; i < m; ++i) {
    const uint32_t u = read_u32(in, "endpoint");
    const uint32_t v = read_u32(in, "endpoint");
    edges.emplace_back(u, v);
  }
  return edges;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  const uint32_t n = read_u32(in, "vertex count");
  const uint64_t m = read_u64(in, "edge count");
  Graph g(n, read_pairs(in, m));
  expect_end(in);
  return g;
}

void serialize_graph(const Graph& g, std::ostream& out) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (uint32_t u = 0; u < g.vertex_count(); ++u) {
    for (uint32_t v : g.neighbors(u)) {
      if (u < v) out << u << ' ' << v << '\n';
    }
  }
}

Digraph parse_digraph(std::istream& in) {
  const uint32_t n = read_u32(in, "vertex count");
  const uint64_t m = read_u64(in, "arc count");
  Digraph g(n, read_pairs(in, m));
  expect_end(in);
  return g;
}

void serialize_digraph(const Digraph& g, std::ostream& out) {
  out << g.vertex_count() << ' ' << g.arc_count() << '\n';
  for (uint32_t u = 0; u < g.vertex_count(); ++u) {
    for (uint32_t v : g.out_neighbors(u)) out << u << ' ' << v << '\n';
  }
}

Hypergraph parse_hypergraph(std::istream& in) {
  const uint32_t d = read_u32(in, "uniformity");
  const uint32_t n = read_u32(in, "vertex count");
  const uint64_t m = read_u64(in, "edge count");
  std::vector<std::vector<uint32_t>> edges;
  edges.reserve(std::min(m, kReserveCap));
  for (uint64_t i = 0; i < m; ++i) {
    std::vector<uint32_t> e;
    e.reserve(d);
    for (uint32_t j = 0; j < d; ++j) e.push_back(read_u32(in, "vertex id"));
    edges.push_back(std::move(e));
  }
  Hypergraph h(n, d, edges);
  expect_end(in);
  return h;
}

void serialize_hypergraph(const Hypergraph& h, std::ostream& out) {
  out << h.uniformity() << ' ' << h.vertex_count() << ' ' << h.edge_count() << '\n';
  for (uint64_t i = 0; i < h.edge_count(); ++i) {
    const auto e = h.edge(i);
    for (size_t j = 0; j < e.size(); ++j) out << (j ? " " : "") << e[j];
    out << '\n';
  }
}

BicliquePartition parse_partition(std::istream& in) {
  expect_tag(in, "bp");
  BicliquePartition p;
  p.n = read_u32(in, "vertex count");
  const uint64_t k = read_u64(in, "member count");
  p.items.reserve(std::min(k, kReserveCap));
  for (uint64_t i = 0; i < k; ++i) {
    const uint32_t lsize = read_u32(in, "left size");
    const uint32_t rsize = read_u32(in, "right size");
    Biclique b;
    b.left = read_side(in, lsize, p.n);
    b.right = read_side(in, rsize, p.n);
    check_disjoint(b.left, b.right);
    p.items.push_back(std::move(b));
  }
  expect_end(in);
  return p;
}

void serialize_partition(const BicliquePartition& p, std::ostream& out) {
  out << "bp " << p.n << ' ' << p.items.size() << '\n';
  for (const Biclique& b : p.items) {
    out << b.left.size() << ' ' << b.right.size();
    for (uint32_t v : b.left) out << ' ' << v;
    for (uint32_t v : b.right) out << ' ' << v;
    out << '\n';
  }
}

DCliquePartition parse_dpartition(std::istream& in) {
  expect_tag(in, "dp");
  DCliquePartition p;
  p.d = read_u32(in, "uniformity");
  if (p.d < 2) throw std::invalid_argument("parse: uniformity must be >= 2");
  p.n = read_u32(in, "vertex count");
  const uint64_t k = read_u64(in, "member count");
  p.items.reserve(std::min(k, kReserveCap));
  std::vector<uint32_t> sizes(p.d);
  for (uint64_t i = 0; i < k; ++i) {
    for (uint32_t j = 0; j < p.d; ++j) sizes[j] = read_u32(in, "part size");
    DClique c;
    c.parts.reserve(p.d);
    for (uint32_t j = 0; j < p.d; ++j) c.parts.push_back(read_side(in, sizes[j], p.n));
    for (uint32_t x = 0; x < p.d; ++x) {
      for (uint32_t y = x + 1; y < p.d; ++y) check_disjoint(c.parts[x], c.parts[y]);
    }
    p.items.push_back(std::move(c));
  }
  expect_end(in);
  return p;
}

void serialize_dpartition(const DCliquePartition& p, std::ostream& out) {
  out << "dp " << p.d << ' ' << p.n << ' ' << p.items.size() << '\n';
  for (const DClique& c : p.items) {
    for (size_t j = 0; j < c.parts.size(); ++j) {
      out << (j ? " " : "") << c.parts[j].size();
    }
    for (const auto& part : c.parts) {
      for (uint32_t v : part) out << ' ' << v;
    }
    out << '\n';
  }
}

std::vector<uint32_t> parse_vertex_set(std::istream& in) {
  std::vector<uint32_t> out;
  uint64_t v;
  while (in >> v) {
    if (v > std::numeric_limits<uint32_t>::max()) {
      throw std::invalid_argument("parse: vertex id too large");
    }
    out.push_back(static_cast<uint32_t>(v));
  }
  if (!in.eof()) throw std::invalid_argument("parse: bad vertex id token");
  return out;
}

}  // namespace bcp
