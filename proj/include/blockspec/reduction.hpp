#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "blockspec/errors.hpp"
#include "blockspec/hermitian.hpp"
#include "blockspec/linalg.hpp"
#include "blockspec/rng.hpp"
#include "blockspec/structure.hpp"

namespace blockspec {

// cos(2 pi m / k) with the argument folded to min(m mod k, k - m mod k):
// equal cosines evaluate from bit-identical arguments, so members j and
// k + 2 - j of the reduced family come out exactly equal.
inline double circulant_cosine(int k, long m) {
  const long d = ((m % k) + k) % k;
  const long folded = std::min(d, static_cast<long>(k) - d);
  return std::cos(2.0 * std::numbers::pi * static_cast<double>(folded) /
                  static_cast<double>(k));
}

// The k independent matrices to which the symmetric block circulant
// reduces: conjugating by the Fourier-permutation similarity turns the
// kn x kn matrix into a direct sum of
//   b(j) = k^{-1/2} (a_1 + 2 sum_{l=2}^{ceil((k+1)/2)} cos(2 pi (l-1)(j-1)/k) a_l
//          [+ cos((j-1) pi) a_{k/2+1} for even k]),   j = 1..k.
template <class Scalar>
struct ReducedFamily {
  int k = 1;
  std::vector<Hermitian<Scalar>> members;  // member j at index j-1
};

template <class Scalar>
ReducedFamily<Scalar> reduce_circulant(const BlockAssignment<Scalar>& blocks, int k) {
  if (k < 1) throw ConfigError("reduce_circulant: k must be >= 1");
  const std::size_t expected = static_cast<std::size_t>(k / 2 + 1);
  if (blocks.size() != expected)
    throw ConfigError("reduce_circulant: expected " + std::to_string(expected) +
                      " blocks for k = " + std::to_string(k));
  const Index n = detail::common_block_dim(blocks);
  if (n < 1) throw ConfigError("reduce_circulant: blocks must be nonempty");

  const double inv_sqrt_k = 1.0 / std::sqrt(static_cast<double>(k));
  const bool even = k % 2 == 0;
  // Cosine weights run over l = 2..(k+1)/2 for odd k; for even k the last
  // block enters once with weight cos((j-1) pi) = (-1)^{j-1}.
  const int cosine_blocks = even ? k / 2 - 1 : (k - 1) / 2;

  ReducedFamily<Scalar> family;
  family.k = k;
  family.members.reserve(static_cast<std::size_t>(k));
  for (int j = 1; j <= k; ++j) {
    Matrix<Scalar> acc = blocks[0].matrix();
    for (int l = 2; l < 2 + cosine_blocks; ++l) {
      const double w =
          2.0 * circulant_cosine(k, static_cast<long>(l - 1) * static_cast<long>(j - 1));
      acc += w * blocks[static_cast<std::size_t>(l - 1)].matrix();
    }
    if (even) {
      const double sign = (j - 1) % 2 == 0 ? 1.0 : -1.0;
      acc += sign * blocks[static_cast<std::size_t>(k / 2)].matrix();
    }
    family.members.push_back(Hermitian<Scalar>::assume(inv_sqrt_k * acc));
  }
  return family;
}

// Assembles the block circulant from `blocks`, diagonalizes it, and
// compares with the union of the reduced members' spectra.  Returns the
// largest absolute eigenvalue discrepancy.
template <class Scalar>
double verify_reduction(const BlockAssignment<Scalar>& blocks, int k) {
  const ReducedFamily<Scalar> family = reduce_circulant(blocks, k);
  const Spectrum whole = eigenvalues(assemble(circulant_structure(k), blocks));

  std::vector<double> parts;
  parts.reserve(static_cast<std::size_t>(whole.size()));
  for (const auto& member : family.members) {
    const Spectrum s = eigenvalues(member);
    for (Index i = 0; i < s.size(); ++i) parts.push_back(s.values(i));
  }
  std::sort(parts.begin(), parts.end());

  if (static_cast<Index>(parts.size()) != whole.size())
    throw ContractError("verify_reduction: spectra sizes disagree");
  double gap = 0.0;
  for (Index i = 0; i < whole.size(); ++i)
    gap = std::max(gap, std::abs(whole.values(i) - parts[static_cast<std::size_t>(i)]));
  return gap;
}

// Samples `reps` independent block families, reduces each, and returns the
// pooled sample variance of sqrt(n) times the off-diagonal entries of
// member j, indexed j-1.  Under the reduction these match
// circulant_component_variance(k, j).
std::vector<double> reduced_variance_check(int k, Index n, int reps, const Seed& seed);

}  // namespace blockspec
