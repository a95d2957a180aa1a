#include "bcp/distributions.hpp"

#include <algorithm>
#include <stdexcept>

#include "bcp/check.hpp"

namespace bcp {

std::vector<std::vector<uint32_t>> enumerate_distributions(uint32_t d) {
  if (d < 2) throw std::invalid_argument("distributions need uniformity >= 2");
  const uint32_t len = d - 1;
  std::vector<std::vector<uint32_t>> out;
  std::vector<uint32_t> cur(len, 0);
  // Recursive descent in lexicographic order: position p takes 0..remaining,
  // the last position absorbs the rest.
  auto rec = [&](auto&& self, uint32_t p, uint32_t remaining) -> void {
    if (p + 1 == len) {
      cur[p] = remaining;
      out.push_back(cur);
      return;
    }
    for (uint32_t v = 0; v <= remaining; ++v) {
      cur[p] = v;
      self(self, p + 1, remaining - v);
    }
  };
  rec(rec, 0, d);
  return out;
}

uint64_t multinomial(uint32_t d, std::span<const uint32_t> x) {
  BCP_CHECK(d <= 20, "multinomial beyond 20! would overflow");
  uint64_t sum = 0;
  for (uint32_t xi : x) sum += xi;
  BCP_CHECK(sum == d, "multinomial argument must compose d");
  unsigned __int128 result = 1;
  uint32_t used = 0;
  // Product of C(used + x_i, x_i) telescopes to d! / prod(x_i!).
  for (uint32_t xi : x) {
    for (uint32_t i = 1; i <= xi; ++i) {
      result = result * (used + i) / i;  // exact: prefix of a binomial row
    }
    used += xi;
  }
  return static_cast<uint64_t>(result);
}

bool multinomial_identity_ok(uint32_t d) {
  const auto dists = enumerate_distributions(d);
  uint64_t sum = 0;
  for (const auto& x : dists) sum += multinomial(d, x);
  uint64_t target = 1;
  for (uint32_t i = 0; i < d; ++i) target *= d - 1;
  return sum == target;
}

namespace {

std::vector<uint32_t> rotate_left(const std::vector<uint32_t>& x, uint32_t k) {
  const uint32_t len = static_cast<uint32_t>(x.size());
  std::vector<uint32_t> out(len);
  for (uint32_t i = 0; i < len; ++i) out[i] = x[(i + k) % len];
  return out;
}

}  // namespace

uint32_t SelectionStrategy::index_of(std::span<const uint32_t> x) const {
  const auto it = std::lower_bound(
      dists.begin(), dists.end(), x, [](const std::vector<uint32_t>& a, std::span<const uint32_t> b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
      });
  if (it == dists.end() || it->size() != x.size() ||
      !std::equal(it->begin(), it->end(), x.begin())) {
    throw std::invalid_argument("not a distribution of this strategy");
  }
  return static_cast<uint32_t>(it - dists.begin());
}

SelectionStrategy make_equitable_strategy(uint32_t d) {
  SelectionStrategy s;
  s.d = d;
  s.dists = enumerate_distributions(d);
  const uint32_t len = d - 1;
  const uint32_t count = static_cast<uint32_t>(s.dists.size());
  constexpr uint32_t kUnset = ~0u;
  s.assign.assign(count, kUnset);
  if (len == 1) {
    // Single class, single distribution (d).
    s.assign[0] = 0;
    return s;
  }
  for (uint32_t start = 0; start < count; ++start) {
    if (s.assign[start] != kUnset) continue;
    // Walk the rotation class of this distribution.
    std::vector<uint32_t> members;  // indices into dists, position = rotation of dists[start]
    for (uint32_t k = 0; k < len; ++k) {
      members.push_back(s.index_of(rotate_left(s.dists[start], k)));
    }
    {
      auto uniq = members;
      std::sort(uniq.begin(), uniq.end());
      uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
      BCP_CHECK(uniq.size() == len, "rotation class must have d - 1 distinct members");
    }
    // Representative: lexicographically least rotation with first entry >= 2.
    uint32_t rep_k = kUnset;
    for (uint32_t k = 0; k < len; ++k) {
      const auto& cand = s.dists[members[k]];
      if (cand[0] < 2) continue;
      if (rep_k == kUnset || cand < s.dists[members[rep_k]]) rep_k = k;
    }
    BCP_CHECK(rep_k != kUnset, "every rotation class has an entry >= 2");
    // Rotation j of the representative is members[(rep_k + j) % len]; its
    // target is where the representative's first entry lands.
    for (uint32_t j = 0; j < len; ++j) {
      const uint32_t idx = members[(rep_k + j) % len];
      const uint32_t target = (len - j) % len;
      BCP_CHECK(s.assign[idx] == kUnset, "rotation classes must not overlap");
      BCP_CHECK(s.dists[idx][target] >= 2, "assigned class must hold >= 2 edge vertices");
      s.assign[idx] = target;
    }
  }
  return s;
}

}  // namespace bcp
