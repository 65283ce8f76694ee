#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "blockspec/errors.hpp"
#include "blockspec/hermitian.hpp"
#include "blockspec/types.hpp"

namespace blockspec {

// One cell of a block pattern: which symbol sits there, with what real
// coefficient.  Symbols are dense 0-based ids into the structure's alphabet.
struct StructureEntry {
  double coefficient = 0.0;
  int symbol = -1;

  friend bool operator==(const StructureEntry&, const StructureEntry&) = default;
};

// A k x k symmetric pattern of symbols with coefficients.  Assigning an
// independent Hermitian matrix to each symbol and tiling produces a block
// Hermitian matrix; the pattern fixes which blocks repeat and how they are
// scaled.  Symmetry of the pattern (same symbol and coefficient at (i,j)
// and (j,i)) is what makes the assembled matrix Hermitian.
class BlockStructure {
 public:
  // Throws ConfigError unless: k >= 1, entries has k*k cells (row-major),
  // the pattern is symmetric, symbol ids are exactly 0..alphabet_size-1
  // with every symbol used, and all coefficients are finite.
  BlockStructure(int k, int alphabet_size, std::vector<StructureEntry> entries,
                 std::vector<std::string> symbol_names, std::string name = "");

  int k() const { return k_; }
  int alphabet_size() const { return alphabet_size_; }

  const StructureEntry& entry(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(k_) +
                    static_cast<std::size_t>(j)];
  }

  const std::vector<StructureEntry>& entries() const { return entries_; }
  const std::vector<std::string>& symbol_names() const { return symbol_names_; }
  const std::string& name() const { return name_; }

  double max_abs_coefficient() const;

  // Structural equality: same pattern and coefficients.  Names are
  // presentation only and do not participate.
  friend bool operator==(const BlockStructure& a, const BlockStructure& b) {
    return a.k_ == b.k_ && a.alphabet_size_ == b.alphabet_size_ &&
           a.entries_ == b.entries_;
  }

 private:
  int k_ = 0;
  int alphabet_size_ = 0;
  std::vector<StructureEntry> entries_;
  std::vector<std::string> symbol_names_;
  std::string name_;
};

// Symbol id shared by cells (i, j) of a symmetric circulant pattern:
// min(d, k - d) with d = (j - i) mod k.  Ids run over 0..floor(k/2).
int circulant_symbol(int k, int i, int j);

// Symmetric circulant pattern with coefficient 1/sqrt(k) everywhere.
BlockStructure circulant_structure(int k);

// Symmetric Toeplitz pattern: symbol |i - j|, coefficient 1.
BlockStructure toeplitz_structure(int k);

// Every unordered block position gets its own symbol, coefficient 1;
// the assembled matrix is a plain Wigner matrix of the blocks.
BlockStructure full_wigner_structure(int k);

// Blocks indexed by symbol id.
template <class Scalar>
using BlockAssignment = std::vector<Hermitian<Scalar>>;

namespace detail {

void check_assignment_shape(int alphabet_size, std::size_t assigned,
                            Index block_dim);

template <class Scalar>
Index common_block_dim(const BlockAssignment<Scalar>& blocks) {
  Index n = blocks.empty() ? 0 : blocks.front().dim();
  for (const auto& b : blocks)
    if (b.dim() != n)
      throw ConfigError("assemble: all blocks must share one dimension");
  return n;
}

}  // namespace detail

// Tiles the assigned blocks into the kn x kn matrix described by the
// pattern.  Cell (i, j) holds coefficient * block(symbol); pattern symmetry
// plus Hermitian blocks make the result exactly Hermitian.
template <class Scalar>
Hermitian<Scalar> assemble(const BlockStructure& s,
                           const BlockAssignment<Scalar>& blocks) {
  const Index n = detail::common_block_dim(blocks);
  detail::check_assignment_shape(s.alphabet_size(), blocks.size(), n);
  const int k = s.k();
  Matrix<Scalar> out(k * n, k * n);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const StructureEntry& e = s.entry(i, j);
      out.block(i * n, j * n, n, n) = e.coefficient * blocks[static_cast<std::size_t>(e.symbol)].matrix();
    }
  return Hermitian<Scalar>::assume(std::move(out));
}

}  // namespace blockspec
