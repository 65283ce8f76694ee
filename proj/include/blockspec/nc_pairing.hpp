#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace blockspec {

// Catalan number C_s = binom(2s, s)/(s+1); exact for 0 <= s <= 30.
std::uint64_t catalan(int s);

// A pair partition of {0, ..., m-1}: pairs stored as (lo, hi), sorted by lo.
struct NCPairing {
  std::vector<std::pair<int, int>> pairs;

  friend bool operator==(const NCPairing&, const NCPairing&) = default;
};

// True when `p` is a valid pair partition of {0, ..., m-1} with no two
// pairs (a, b), (c, d) interleaving as a < c < b < d.
bool is_noncrossing(const NCPairing& p, int m);

// All non-crossing pair partitions of {0, ..., m-1} in lexicographic order
// of their pair lists; empty for odd m.  m <= 20 (C_10 = 16796 results).
std::vector<NCPairing> enumerate_nc2(int m);

// Number of non-crossing pair partitions of the word's positions that only
// pair equal labels.  This is the mixed moment of a free semicircular
// family indexed by the labels; a single repeated label gives a Catalan
// number, an odd-length word gives 0.  Length <= 20.
std::uint64_t word_moment(std::span<const int> labels);

}  // namespace blockspec
