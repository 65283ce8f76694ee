#include "blockspec/structure.hpp"

#include <cmath>
#include <cstdlib>

namespace blockspec {

BlockStructure::BlockStructure(int k, int alphabet_size,
                               std::vector<StructureEntry> entries,
                               std::vector<std::string> symbol_names,
                               std::string name)
    : k_(k),
      alphabet_size_(alphabet_size),
      entries_(std::move(entries)),
      symbol_names_(std::move(symbol_names)),
      name_(std::move(name)) {
  if (k_ < 1) throw ConfigError("structure: k must be >= 1");
  if (alphabet_size_ < 1) throw ConfigError("structure: alphabet must be nonempty");
  if (entries_.size() != static_cast<std::size_t>(k_) * static_cast<std::size_t>(k_))
    throw ConfigError("structure: expected k*k entries");
  if (!symbol_names_.empty() &&
      symbol_names_.size() != static_cast<std::size_t>(alphabet_size_))
    throw ConfigError("structure: symbol name list does not match alphabet size");

  std::vector<bool> used(static_cast<std::size_t>(alphabet_size_), false);
  for (const StructureEntry& e : entries_) {
    if (e.symbol < 0 || e.symbol >= alphabet_size_)
      throw ConfigError("structure: symbol id " + std::to_string(e.symbol) +
                        " outside alphabet");
    if (!std::isfinite(e.coefficient))
      throw ConfigError("structure: coefficients must be finite");
    used[static_cast<std::size_t>(e.symbol)] = true;
  }
  for (int s = 0; s < alphabet_size_; ++s) {
    if (!used[static_cast<std::size_t>(s)]) {
      const std::string label = symbol_names_.empty()
                                    ? std::to_string(s)
                                    : "'" + symbol_names_[static_cast<std::size_t>(s)] + "'";
      throw ConfigError("structure: symbol " + label + " never appears");
    }
  }
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < i; ++j)
      if (!(entry(i, j) == entry(j, i)))
        throw ConfigError("structure: not symmetric at (" + std::to_string(i) +
                          ", " + std::to_string(j) + ")");
}

double BlockStructure::max_abs_coefficient() const {
  double m = 0.0;
  for (const StructureEntry& e : entries_) m = std::max(m, std::abs(e.coefficient));
  return m;
}

int circulant_symbol(int k, int i, int j) {
  const int d = ((j - i) % k + k) % k;
  return std::min(d, k - d);
}

BlockStructure circulant_structure(int k) {
  if (k < 1) throw ConfigError("circulant_structure: k must be >= 1");
  const int h = k / 2 + 1;
  const double coef = 1.0 / std::sqrt(static_cast<double>(k));
  std::vector<StructureEntry> entries;
  entries.reserve(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      entries.push_back({coef, circulant_symbol(k, i, j)});
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(h));
  for (int s = 0; s < h; ++s) names.push_back("a" + std::to_string(s + 1));
  return BlockStructure(k, h, std::move(entries), std::move(names),
                        "circulant-" + std::to_string(k));
}

BlockStructure toeplitz_structure(int k) {
  if (k < 1) throw ConfigError("toeplitz_structure: k must be >= 1");
  std::vector<StructureEntry> entries;
  entries.reserve(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) entries.push_back({1.0, std::abs(i - j)});
  std::vector<std::string> names;
  for (int s = 0; s < k; ++s) names.push_back("t" + std::to_string(s));
  return BlockStructure(k, k, std::move(entries), std::move(names),
                        "toeplitz-" + std::to_string(k));
}

BlockStructure full_wigner_structure(int k) {
  if (k < 1) throw ConfigError("full_wigner_structure: k must be >= 1");
  // Unordered position (i, j), i <= j, gets id i*k + j - i*(i+1)/2.
  std::vector<StructureEntry> entries(static_cast<std::size_t>(k) *
                                      static_cast<std::size_t>(k));
  std::vector<std::string> names;
  int next = 0;
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) {
      entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(k) +
              static_cast<std::size_t>(j)] = {1.0, next};
      entries[static_cast<std::size_t>(j) * static_cast<std::size_t>(k) +
              static_cast<std::size_t>(i)] = {1.0, next};
      names.push_back("w" + std::to_string(i + 1) + std::to_string(j + 1));
      ++next;
    }
  return BlockStructure(k, next, std::move(entries), std::move(names),
                        "wigner-full-" + std::to_string(k));
}

namespace detail {

void check_assignment_shape(int alphabet_size, std::size_t assigned, Index block_dim) {
  if (assigned != static_cast<std::size_t>(alphabet_size))
    throw ConfigError("assemble: structure expects " + std::to_string(alphabet_size) +
                      " blocks, got " + std::to_string(assigned));
  if (block_dim < 1) throw ConfigError("assemble: blocks must be nonempty");
}

}  // namespace detail

}  // namespace blockspec
