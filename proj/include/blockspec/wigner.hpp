#pragma once

#include <cmath>
#include <string>
#include <type_traits>
#include <vector>

#include "blockspec/errors.hpp"
#include "blockspec/hermitian.hpp"
#include "blockspec/rng.hpp"
#include "blockspec/types.hpp"

namespace blockspec {

enum class Flavor { kReal, kComplex };
enum class DiagonalLaw { kGaussian, kZero };
enum class EntryLaw { kGaussian, kRademacher, kUniform };

// A Wigner matrix of dimension n: independent entries above the diagonal
// with mean 0 and variance sigma2 (E |x_ij|^2 for the complex flavor),
// standard real gaussian or zero diagonal, the whole array scaled by
// n^{-1/2}.
struct WignerSpec {
  Index n = 1;
  double sigma2 = 1.0;
  Flavor flavor = Flavor::kReal;
  DiagonalLaw diagonal_law = DiagonalLaw::kGaussian;
  EntryLaw entry_law = EntryLaw::kGaussian;
};

inline void validate(const WignerSpec& spec) {
  if (spec.n < 1) throw ConfigError("wigner: dimension must be >= 1");
  if (!(spec.sigma2 > 0.0) || !std::isfinite(spec.sigma2))
    throw ConfigError("wigner: entry variance must be positive and finite");
}

namespace detail {

// Unit-variance real draw from one block.  The uniform law is
// sqrt(3) * (2u - 1) on [-sqrt(3), sqrt(3)).
inline double unit_real_entry(EntryLaw law, const RandomBlock& b) {
  switch (law) {
    case EntryLaw::kGaussian:
      return normal_pair(b).first;
    case EntryLaw::kRademacher:
      return (b.lo & 1u) ? 1.0 : -1.0;
    case EntryLaw::kUniform:
      return std::sqrt(3.0) * (2.0 * uniform01(b.lo) - 1.0);
  }
  throw ConfigError("wigner: unknown entry law");
}

// Unit-E|z|^2 complex draw: independent real and imaginary parts of
// variance 1/2 each.
inline Complex unit_complex_entry(EntryLaw law, const RandomBlock& b) {
  const double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
  switch (law) {
    case EntryLaw::kGaussian: {
      const auto [z0, z1] = normal_pair(b);
      return Complex(z0 * inv_sqrt2, z1 * inv_sqrt2);
    }
    case EntryLaw::kRademacher:
      return Complex(((b.lo & 1u) ? 1.0 : -1.0) * inv_sqrt2,
                     ((b.hi & 1u) ? 1.0 : -1.0) * inv_sqrt2);
    case EntryLaw::kUniform:
      return Complex(std::sqrt(3.0) * (2.0 * uniform01(b.lo) - 1.0) * inv_sqrt2,
                     std::sqrt(3.0) * (2.0 * uniform01(b.hi) - 1.0) * inv_sqrt2);
  }
  throw ConfigError("wigner: unknown entry law");
}

template <class Scalar>
Scalar unit_entry(EntryLaw law, const RandomBlock& b) {
  if constexpr (std::is_same_v<Scalar, Complex>)
    return unit_complex_entry(law, b);
  else
    return unit_real_entry(law, b);
}

template <class Scalar>
void check_flavor(const WignerSpec& spec) {
  const bool complex_scalar = std::is_same_v<Scalar, Complex>;
  if (complex_scalar != (spec.flavor == Flavor::kComplex))
    throw ConfigError("wigner: scalar type does not match requested flavor");
}

}  // namespace detail

// A sampled Wigner matrix together with its unscaled entry array, kept for
// entry-level post-processing such as truncation.
template <class Scalar>
struct WignerDraw {
  WignerSpec spec;
  Matrix<Scalar> raw;        // unscaled entries x_ij
  Hermitian<Scalar> matrix;  // raw / sqrt(n)
};

// Entry (i, j), i <= j, consumes the counter value i*n + j of `seed`; the
// draw is therefore a pure function of (spec, seed) independent of
// traversal order.
template <class Scalar>
WignerDraw<Scalar> sample_wigner_draw(const WignerSpec& spec, const Seed& seed) {
  validate(spec);
  detail::check_flavor<Scalar>(spec);
  const Index n = spec.n;
  const double sigma = std::sqrt(spec.sigma2);
  Matrix<Scalar> raw(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i; j < n; ++j) {
      const RandomBlock b =
          random_block(seed, static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(n) +
                                 static_cast<std::uint64_t>(j));
      if (i == j) {
        raw(i, i) = spec.diagonal_law == DiagonalLaw::kZero
                        ? Scalar(0)
                        : Scalar(normal_pair(b).first);
      } else {
        const Scalar v = sigma * detail::unit_entry<Scalar>(spec.entry_law, b);
        raw(i, j) = v;
        raw(j, i) = Eigen::numext::conj(v);
      }
    }
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  WignerDraw<Scalar> draw;
  draw.spec = spec;
  draw.matrix = Hermitian<Scalar>::assume(scale * raw);
  draw.raw = std::move(raw);
  return draw;
}

template <class Scalar>
Hermitian<Scalar> sample_wigner(const WignerSpec& spec, const Seed& seed) {
  return sample_wigner_draw<Scalar>(spec, seed).matrix;
}

// `count` independent draws from one seed, block l on seed.substream(l).
template <class Scalar>
std::vector<Hermitian<Scalar>> sample_wigner_family(const WignerSpec& spec,
                                                    const Seed& seed, int count) {
  if (count < 0) throw ConfigError("sample_wigner_family: count must be >= 0");
  std::vector<Hermitian<Scalar>> blocks;
  blocks.reserve(static_cast<std::size_t>(count));
  for (int l = 0; l < count; ++l)
    blocks.push_back(sample_wigner<Scalar>(spec, seed.substream(static_cast<std::uint64_t>(l))));
  return blocks;
}

// Cutoff c together with the variance of the truncated entry
// x 1(|x| <= c); all supported laws are symmetric, so the truncated mean
// is zero and standardization is division by sigma(c).
struct TruncationParams {
  double cutoff = 0.0;
  double sigma_c2 = 0.0;
};

// Analytic truncation variance for the spec's entry law.  Supported:
// real gaussian, real uniform, real rademacher (requires c >= sigma),
// complex gaussian.  Others raise ConfigError.
TruncationParams truncation_params(const WignerSpec& spec, double cutoff);

// Replaces each off-diagonal entry x by x 1(|x| <= c) / sigma(c), zeroes
// the diagonal, and rescales by n^{-1/2}: the standardized truncation used
// to reduce bounded-moment universality statements to bounded entries.
template <class Scalar>
Hermitian<Scalar> truncate_standardize(const WignerDraw<Scalar>& draw, double cutoff) {
  const TruncationParams params = truncation_params(draw.spec, cutoff);
  const double inv_sigma_c = 1.0 / std::sqrt(params.sigma_c2);
  const Index n = draw.spec.n;
  Matrix<Scalar> out(n, n);
  for (Index i = 0; i < n; ++i) {
    out(i, i) = Scalar(0);
    for (Index j = i + 1; j < n; ++j) {
      const Scalar x = draw.raw(i, j);
      const Scalar v = Eigen::numext::abs(x) <= cutoff ? Scalar(inv_sigma_c * x)
                                                       : Scalar(0);
      out(i, j) = v;
      out(j, i) = Eigen::numext::conj(v);
    }
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  return Hermitian<Scalar>::assume(scale * out);
}

// The kn x kn matrix whose k x k tiles repeat a family of scalar Wigner
// matrices in a symmetric circulant pattern; entries are dependent (each
// scalar matrix appears in every tile row) but any given entry is a plain
// rescaled gaussian.
struct DependentWignerDraw {
  int k = 1;
  Index n = 1;
  std::vector<Hermitian<double>> blocks;  // one per circulant symbol
  Hermitian<double> matrix;               // dimension k*n
};

// The underlying floor(k/2)+1 independent Wigner(n, 1) matrices, block l
// drawn from seed.substream(l).
std::vector<Hermitian<double>> sample_dependent_scalar_blocks(int k, Index n,
                                                              const Seed& seed);

DependentWignerDraw build_dependent_wigner(int k, Index n, const Seed& seed);

// Which scalar matrix (by circulant symbol) and which of its entries an
// entry of the dependent matrix replicates: entry (row, col) of the big
// matrix equals 1/sqrt(k) times entry (min(i,j), max(i,j)) of block
// `symbol`, conjugated when i > j.
struct EntrySource {
  Index block_row = 0;
  Index block_col = 0;
  int symbol = 0;

  friend bool operator==(const EntrySource&, const EntrySource&) = default;
};

EntrySource dependent_entry_source(int k, Index n, Index row, Index col);

}  // namespace blockspec
