#include "blockspec/nc_pairing.hpp"

#include "blockspec/errors.hpp"

namespace blockspec {

namespace {

constexpr int kMaxWordLength = 20;

// All non-crossing pairings of positions [lo, hi), hi - lo even, in
// lexicographic order.  The first position pairs with lo + 1, lo + 3, ...;
// the enclosed stretch and the tail then pair independently, which is
// exactly the non-crossing recursion.
std::vector<std::vector<std::pair<int, int>>> pairings_of(int lo, int hi) {
  std::vector<std::vector<std::pair<int, int>>> result;
  if (lo == hi) {
    result.push_back({});
    return result;
  }
  for (int v = lo + 1; v < hi; v += 2) {
    const auto inner = pairings_of(lo + 1, v);
    const auto tail = pairings_of(v + 1, hi);
    for (const auto& in : inner)
      for (const auto& tl : tail) {
        std::vector<std::pair<int, int>> p;
        p.reserve(1 + in.size() + tl.size());
        p.emplace_back(lo, v);
        p.insert(p.end(), in.begin(), in.end());
        p.insert(p.end(), tl.begin(), tl.end());
        result.push_back(std::move(p));
      }
  }
  return result;
}

}  // namespace

std::uint64_t catalan(int s) {
  if (s < 0 || s > 30) throw CapacityError("catalan: order must be in [0, 30]");
  // C_{t+1} = C_t * 2(2t+1)/(t+2); the division is exact at each step and
  // every intermediate fits in 64 bits for s <= 30.
  std::uint64_t c = 1;
  for (int t = 0; t < s; ++t)
    c = c * 2 * (2 * static_cast<std::uint64_t>(t) + 1) /
        (static_cast<std::uint64_t>(t) + 2);
  return c;
}

bool is_noncrossing(const NCPairing& p, int m) {
  if (m < 0 || m % 2 != 0) return false;
  if (p.pairs.size() != static_cast<std::size_t>(m / 2)) return false;
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  for (const auto& [lo, hi] : p.pairs) {
    if (lo < 0 || hi >= m || lo >= hi) return false;
    if (seen[static_cast<std::size_t>(lo)] || seen[static_cast<std::size_t>(hi)])
      return false;
    seen[static_cast<std::size_t>(lo)] = seen[static_cast<std::size_t>(hi)] = true;
  }
  for (const auto& [a, b] : p.pairs)
    for (const auto& [c, d] : p.pairs)
      if (a < c && c < b && b < d) return false;
  return true;
}

std::vector<NCPairing> enumerate_nc2(int m) {
  if (m < 0 || m > kMaxWordLength)
    throw CapacityError("enumerate_nc2: length must be in [0, 20]");
  std::vector<NCPairing> out;
  if (m % 2 != 0) return out;
  auto raw = pairings_of(0, m);
  out.reserve(raw.size());
  for (auto& p : raw) out.push_back(NCPairing{std::move(p)});
  return out;
}

std::uint64_t word_moment(std::span<const int> labels) {
  const int m = static_cast<int>(labels.size());
  if (m > kMaxWordLength) throw CapacityError("word_moment: length must be <= 20");
  if (m % 2 != 0) return 0;
  if (m == 0) return 1;
  // f(i, j) = number of label-respecting non-crossing pairings of positions
  // [i, j): position i pairs with some t of opposite parity carrying the
  // same label, splitting the interval in two.
  const auto idx = [](int i) { return static_cast<std::size_t>(i); };
  std::vector<std::vector<std::uint64_t>> f(
      idx(m + 1), std::vector<std::uint64_t>(idx(m + 1), 0));
  for (int i = 0; i <= m; ++i) f[idx(i)][idx(i)] = 1;
  for (int len = 2; len <= m; len += 2)
    for (int i = 0; i + len <= m; ++i) {
      const int j = i + len;
      std::uint64_t total = 0;
      for (int t = i + 1; t < j; t += 2)
        if (labels[idx(t)] == labels[idx(i)])
          total += f[idx(i + 1)][idx(t)] * f[idx(t + 1)][idx(j)];
      f[idx(i)][idx(j)] = total;
    }
  return f[0][idx(m)];
}

}  // namespace blockspec
