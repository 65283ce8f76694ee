#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>

namespace blockspec {

namespace detail {

// Finalizer of splitmix64; bijective on 64-bit integers.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

}  // namespace detail

// Identifies an independent random stream.  Draws are counter-based:
// (seed, index) determines a 128-bit block, so any entry of any matrix can
// be generated independently of evaluation order, thread count, or how
// much randomness other consumers used.
struct Seed {
  std::uint64_t root = 0;
  std::uint64_t stream = 0;

  // Child stream t under the same root.  stream -> stream + golden*(t+1)
  // is injective in t, and mix64 keeps distinct parents from colliding
  // for the child indices used in practice.
  Seed substream(std::uint64_t t) const {
    return Seed{root, detail::mix64(stream + detail::kGolden * (t + 1))};
  }

  friend bool operator==(const Seed&, const Seed&) = default;
};

struct RandomBlock {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
};

// Philox-4x32-10 counter-based generator (Salmon et al. round constants).
// Counter = (index, seed.stream), key = seed.root.
inline RandomBlock random_block(const Seed& seed, std::uint64_t index) {
  std::uint32_t c0 = static_cast<std::uint32_t>(index);
  std::uint32_t c1 = static_cast<std::uint32_t>(index >> 32);
  std::uint32_t c2 = static_cast<std::uint32_t>(seed.stream);
  std::uint32_t c3 = static_cast<std::uint32_t>(seed.stream >> 32);
  std::uint32_t k0 = static_cast<std::uint32_t>(seed.root);
  std::uint32_t k1 = static_cast<std::uint32_t>(seed.root >> 32);
  for (int round = 0; round < 10; ++round) {
    const std::uint64_t m0 = 0xD2511F53ULL * c0;
    const std::uint64_t m1 = 0xCD9E8D57ULL * c2;
    const std::uint32_t h0 = static_cast<std::uint32_t>(m0 >> 32);
    const std::uint32_t l0 = static_cast<std::uint32_t>(m0);
    const std::uint32_t h1 = static_cast<std::uint32_t>(m1 >> 32);
    const std::uint32_t l1 = static_cast<std::uint32_t>(m1);
    c0 = h1 ^ c1 ^ k0;
    c1 = l1;
    c2 = h0 ^ c3 ^ k1;
    c3 = l0;
    k0 += 0x9E3779B9u;
    k1 += 0xBB67AE85u;
  }
  return RandomBlock{c0 | (static_cast<std::uint64_t>(c1) << 32),
                     c2 | (static_cast<std::uint64_t>(c3) << 32)};
}

// Uniform on (0, 1] from the top 53 bits; safe as a log argument.
inline double uniform_open01(std::uint64_t word) {
  return static_cast<double>((word >> 11) + 1) * 0x1.0p-53;
}

// Uniform on [0, 1).
inline double uniform01(std::uint64_t word) {
  return static_cast<double>(word >> 11) * 0x1.0p-53;
}

// Two independent standard normals from one block (Box-Muller).
inline std::pair<double, double> normal_pair(const RandomBlock& b) {
  const double r = std::sqrt(-2.0 * std::log(uniform_open01(b.lo)));
  const double theta = 2.0 * std::numbers::pi * uniform01(b.hi);
  return {r * std::cos(theta), r * std::sin(theta)};
}

inline std::pair<double, double> normal_pair(const Seed& seed, std::uint64_t index) {
  return normal_pair(random_block(seed, index));
}

}  // namespace blockspec
