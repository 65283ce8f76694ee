#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blockspec/structure.hpp"

namespace blockspec {

// Default ceiling on the path-enumeration work k^s * C_{s/2}.
inline constexpr std::uint64_t kDefaultWorkBudget = 1'000'000'000ULL;

// Limiting normalized-trace moment of the assembled block matrix as the
// block dimension grows: the blocks converge to a free semicircular family,
// so the moment of order s is
//
//   (1/k) * sum over closed index paths j_1, ..., j_s of
//       (product of cell coefficients along the path)
//     * (number of non-crossing pairings of the path's symbol word that
//        pair equal symbols only).
//
// Odd orders vanish.  Throws CapacityError when the estimated work
// k^s * C_{s/2} exceeds `budget` (see BLOCKSPEC_BUDGET in the CLI).
double limiting_moment(const BlockStructure& s, int order,
                       std::uint64_t budget = kDefaultWorkBudget);

struct MomentTable {
  std::string structure_id;
  std::vector<double> moments;  // orders 0..max_order

  double moment(int order) const { return moments[static_cast<std::size_t>(order)]; }
  int max_order() const { return static_cast<int>(moments.size()) - 1; }
};

// Moments of orders 0..max_order.  Each even moment is checked against the
// bound (k * max(1, c_max))^s * C_{s/2}; structures whose coefficients are
// all 1 must produce integers, and both checks raise ContractError on
// failure.
MomentTable limiting_moment_table(const BlockStructure& s, int max_order,
                                  std::uint64_t budget = kDefaultWorkBudget);

}  // namespace blockspec
