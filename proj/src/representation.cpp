#include "bcp/representation.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "bcp/check.hpp"

namespace bcp {

uint32_t ceil_lg(uint32_t n) {
  if (n <= 1) return 0;
  return static_cast<uint32_t>(std::bit_width(n - 1));
}

uint64_t SBRepr::weight() const {
  uint64_t w = 0;
  for (const Biclique& b : items) w += b.left.size() + b.right.size();
  return w;
}

uint64_t SBRepr::id_bits() const { return weight() * ceil_lg(n); }

SBRepr build_sb(const BicliquePartition& p) {
  SBRepr sb;
  sb.n = p.n;
  sb.items = p.items;
  return sb;
}

namespace {

void put_u32(std::vector<uint8_t>& out, uint32_t v) {
  out.push_back(static_cast<uint8_t>(v));
  out.push_back(static_cast<uint8_t>(v >> 8));
  out.push_back(static_cast<uint8_t>(v >> 16));
  out.push_back(static_cast<uint8_t>(v >> 24));
}

class ByteReader {
 public:
  explicit ByteReader(std::span<const uint8_t> bytes) : bytes_(bytes) {}

  uint32_t u32() {
    if (bytes_.size() - pos_ < 4) {
      throw std::invalid_argument("sbp: truncated input");
    }
    const uint32_t v = static_cast<uint32_t>(bytes_[pos_]) |
                       static_cast<uint32_t>(bytes_[pos_ + 1]) << 8 |
                       static_cast<uint32_t>(bytes_[pos_ + 2]) << 16 |
                       static_cast<uint32_t>(bytes_[pos_ + 3]) << 24;
    pos_ += 4;
    return v;
  }

  bool done() const { return pos_ == bytes_.size(); }

 private:
  std::span<const uint8_t> bytes_;
  size_t pos_ = 0;
};

void read_side(ByteReader& r, uint32_t len, uint32_t n, std::vector<uint32_t>& out) {
  out.clear();
  out.reserve(len);
  for (uint32_t i = 0; i < len; ++i) {
    const uint32_t v = r.u32();
    if (v >= n) throw std::invalid_argument("sbp: vertex id out of range");
    if (!out.empty() && out.back() >= v) {
      throw std::invalid_argument("sbp: side ids must strictly increase");
    }
    out.push_back(v);
  }
}

}  // namespace

std::vector<uint8_t> serialize_sb(const SBRepr& sb) {
  std::vector<uint8_t> out;
  out.reserve(12 + 4 * (2 * sb.items.size() + sb.weight()));
  for (char c : {'S', 'B', 'P', '1'}) out.push_back(static_cast<uint8_t>(c));
  put_u32(out, sb.n);
  put_u32(out, static_cast<uint32_t>(sb.items.size()));
  for (const Biclique& b : sb.items) {
    put_u32(out, static_cast<uint32_t>(b.left.size()));
    put_u32(out, static_cast<uint32_t>(b.right.size()));
    for (uint32_t v : b.left) put_u32(out, v);
    for (uint32_t v : b.right) put_u32(out, v);
  }
  return out;
}

SBRepr parse_sb(std::span<const uint8_t> bytes) {
  if (bytes.size() < 4 || bytes[0] != 'S' || bytes[1] != 'B' || bytes[2] != 'P' ||
      bytes[3] != '1') {
    throw std::invalid_argument("sbp: bad magic");
  }
  ByteReader r(bytes.subspan(4));
  SBRepr sb;
  sb.n = r.u32();
  const uint32_t k = r.u32();
  sb.items.reserve(k);
  for (uint32_t i = 0; i < k; ++i) {
    const uint32_t llen = r.u32();
    const uint32_t rlen = r.u32();
    if (llen == 0 || rlen == 0) {
      throw std::invalid_argument("sbp: empty biclique side");
    }
    Biclique b;
    read_side(r, llen, sb.n, b.left);
    read_side(r, rlen, sb.n, b.right);
    // Sides must be disjoint: merge-scan the two sorted lists.
    for (size_t x = 0, y = 0; x < b.left.size() && y < b.right.size();) {
      if (b.left[x] == b.right[y]) {
        throw std::invalid_argument("sbp: sides must be disjoint");
      }
      b.left[x] < b.right[y] ? ++x : ++y;
    }
    sb.items.push_back(std::move(b));
  }
  if (!r.done()) throw std::invalid_argument("sbp: trailing bytes");
  return sb;
}

std::vector<std::pair<uint32_t, uint32_t>> decode_edges(const SBRepr& sb) {
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  for (const Biclique& b : sb.items) {
    for (uint32_t l : b.left) {
      for (uint32_t r : b.right) {
        edges.emplace_back(std::min(l, r), std::max(l, r));
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

CBRepr::CBRepr(const SBRepr& sb) : sb_(sb) {
  const uint32_t n = sb_.n;
  removed_.assign(n, 0);
  live_vertices_ = n;
  live_left_.resize(sb_.items.size());
  live_right_.resize(sb_.items.size());
  std::vector<uint64_t> load(n, 0);
  for (size_t i = 0; i < sb_.items.size(); ++i) {
    const Biclique& b = sb_.items[i];
    live_left_[i] = static_cast<uint32_t>(b.left.size());
    live_right_[i] = static_cast<uint32_t>(b.right.size());
    for (uint32_t v : b.left) load[v]++;
    for (uint32_t v : b.right) load[v]++;
  }
  inc_off_.assign(n + 1, 0);
  for (uint32_t v = 0; v < n; ++v) inc_off_[v + 1] = inc_off_[v] + load[v];
  inc_.resize(inc_off_[n]);
  std::vector<uint64_t> cursor(inc_off_.begin(), inc_off_.end() - 1);
  for (size_t i = 0; i < sb_.items.size(); ++i) {
    const Biclique& b = sb_.items[i];
    for (uint32_t v : b.left) inc_[cursor[v]++] = {static_cast<uint32_t>(i), 0};
    for (uint32_t v : b.right) inc_[cursor[v]++] = {static_cast<uint32_t>(i), 1};
  }
}

uint64_t CBRepr::degree(uint32_t v) const {
  if (v >= sb_.n) throw std::invalid_argument("degree: vertex out of range");
  if (removed_[v]) return 0;
  uint64_t deg = 0;
  for (uint64_t i = inc_off_[v]; i < inc_off_[v + 1]; ++i) {
    const auto [member, side] = inc_[i];
    deg += side == 0 ? live_right_[member] : live_left_[member];
  }
  return deg;
}

void CBRepr::degrees_all(std::vector<uint64_t>& out) const {
  out.assign(sb_.n, 0);
  for (uint32_t v = 0; v < sb_.n; ++v) {
    if (!removed_[v]) out[v] = degree(v);
  }
}

bool CBRepr::removed(uint32_t v) const {
  if (v >= sb_.n) throw std::invalid_argument("removed: vertex out of range");
  return removed_[v] != 0;
}

void CBRepr::lazy_remove(uint32_t v) {
  if (v >= sb_.n) throw std::invalid_argument("remove: vertex out of range");
  if (removed_[v]) throw std::logic_error("remove: vertex already removed");
  removed_[v] = 1;
  live_vertices_--;
  for (uint64_t i = inc_off_[v]; i < inc_off_[v + 1]; ++i) {
    const auto [member, side] = inc_[i];
    uint32_t& live = side == 0 ? live_left_[member] : live_right_[member];
    BCP_CHECK(live > 0, "live side count underflow");
    live--;
  }
}

uint64_t CBRepr::extra_bits() const {
  return weight() * (2 * static_cast<uint64_t>(ceil_lg(sb_.n)) + 1);
}

}  // namespace bcp
