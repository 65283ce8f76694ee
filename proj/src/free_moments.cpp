#include "blockspec/free_moments.hpp"

#include <cmath>
#include <functional>
#include <unordered_map>

#include "blockspec/nc_pairing.hpp"

namespace blockspec {

namespace {

constexpr int kMaxOrder = 20;

// Pairing counts depend on the word only through equality of its letters,
// so cache by the word relabeled in order of first occurrence.
class WordMomentCache {
 public:
  explicit WordMomentCache(int alphabet_size)
      : remap_(static_cast<std::size_t>(alphabet_size), -1) {}

  std::uint64_t count(const std::vector<int>& word) {
    canonical_.assign(word.size(), 0);
    key_.assign(word.size(), '\0');
    int next = 0;
    for (int s : word) remap_[static_cast<std::size_t>(s)] = -1;
    for (std::size_t t = 0; t < word.size(); ++t) {
      int& id = remap_[static_cast<std::size_t>(word[t])];
      if (id < 0) id = next++;
      canonical_[t] = id;
      key_[t] = static_cast<char>('0' + id);
    }
    const auto it = cache_.find(key_);
    if (it != cache_.end()) return it->second;
    const std::uint64_t m = word_moment(canonical_);
    cache_.emplace(key_, m);
    return m;
  }

 private:
  std::vector<int> remap_;
  std::vector<int> canonical_;
  std::string key_;
  std::unordered_map<std::string, std::uint64_t> cache_;
};

long double work_estimate(int k, int order) {
  return std::pow(static_cast<long double>(k), order) *
         static_cast<long double>(catalan(order / 2));
}

}  // namespace

double limiting_moment(const BlockStructure& s, int order, std::uint64_t budget) {
  if (order < 0) throw ConfigError("limiting_moment requires order >= 0");
  if (order == 0) return 1.0;
  if (order % 2 == 1) return 0.0;  // centered semicircular variables
  if (order > kMaxOrder)
    throw CapacityError("limiting_moment: order must be <= " +
                        std::to_string(kMaxOrder));
  const int k = s.k();
  const long double work = work_estimate(k, order);
  if (work > static_cast<long double>(budget))
    throw CapacityError("limiting_moment: estimated work " +
                        std::to_string(static_cast<double>(work)) +
                        " exceeds budget " + std::to_string(budget));

  WordMomentCache cache(s.alphabet_size());
  std::vector<int> path(static_cast<std::size_t>(order), 0);
  std::vector<int> word(static_cast<std::size_t>(order), 0);

  // Kahan-compensated sum over closed index paths, visited in a fixed
  // depth-first order so the result is bit-stable.
  double sum = 0.0;
  double comp = 0.0;
  const auto add = [&](double term) {
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  };

  std::function<void(int, double)> visit = [&](int depth, double coef_product) {
    if (depth == order) {
      const StructureEntry& e = s.entry(path[static_cast<std::size_t>(order - 1)], path[0]);
      if (e.coefficient == 0.0) return;
      word[static_cast<std::size_t>(order - 1)] = e.symbol;
      add(coef_product * e.coefficient *
          static_cast<double>(cache.count(word)));
      return;
    }
    for (int j = 0; j < k; ++j) {
      if (depth == 0) {
        path[0] = j;
        visit(1, 1.0);
        continue;
      }
      const StructureEntry& e = s.entry(path[static_cast<std::size_t>(depth - 1)], j);
      if (e.coefficient == 0.0) continue;  // dead subtree, prune exactly
      word[static_cast<std::size_t>(depth - 1)] = e.symbol;
      path[static_cast<std::size_t>(depth)] = j;
      visit(depth + 1, coef_product * e.coefficient);
    }
  };
  visit(0, 1.0);
  return sum / static_cast<double>(k);
}

MomentTable limiting_moment_table(const BlockStructure& s, int max_order,
                                  std::uint64_t budget) {
  if (max_order < 0) throw ConfigError("limiting_moment_table requires max_order >= 0");
  MomentTable table;
  table.structure_id =
      s.name().empty() ? "structure-k" + std::to_string(s.k()) : s.name();
  table.moments.reserve(static_cast<std::size_t>(max_order) + 1);

  bool unit_coefficients = true;
  for (const StructureEntry& e : s.entries())
    unit_coefficients = unit_coefficients && e.coefficient == 1.0;

  for (int order = 0; order <= max_order; ++order) {
    const double m = limiting_moment(s, order, budget);
    if (order % 2 == 0 && order > 0) {
      const double base = static_cast<double>(s.k()) * std::max(1.0, s.max_abs_coefficient());
      const long double bound = std::pow(static_cast<long double>(base), order) *
                                static_cast<long double>(catalan(order / 2));
      if (m < -1e-9 || static_cast<long double>(m) > bound * (1 + 1e-12L) + 1e-12L)
        throw ContractError("limiting moment of order " + std::to_string(order) +
                            " violates its a priori bound");
      if (unit_coefficients) {
        // With unit coefficients the moment times k is a pairing count.
        const double scaled = m * static_cast<double>(s.k());
        if (std::abs(scaled - std::round(scaled)) > 1e-9 * (1.0 + std::abs(scaled)))
          throw ContractError("limiting moment of order " + std::to_string(order) +
                              " should be an integer multiple of 1/k");
      }
    }
    table.moments.push_back(m);
  }
  return table;
}

}  // namespace blockspec
