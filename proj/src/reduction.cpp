#include "blockspec/reduction.hpp"

#include "blockspec/wigner.hpp"

namespace blockspec {

std::vector<double> reduced_variance_check(int k, Index n, int reps, const Seed& seed) {
  if (k < 1 || n < 2) throw ConfigError("reduced_variance_check: need k >= 1, n >= 2");
  if (reps < 1) throw ConfigError("reduced_variance_check: need reps >= 1");

  std::vector<double> sum(static_cast<std::size_t>(k), 0.0);
  std::vector<double> sum_sq(static_cast<std::size_t>(k), 0.0);
  const double root_n = std::sqrt(static_cast<double>(n));

  for (int r = 0; r < reps; ++r) {
    const Seed rep_seed{seed.root, seed.stream + static_cast<std::uint64_t>(r)};
    const auto blocks = sample_dependent_scalar_blocks(k, n, rep_seed);
    const ReducedFamily<double> family = reduce_circulant(blocks, k);
    for (int j = 0; j < k; ++j) {
      const RealMatrix& m = family.members[static_cast<std::size_t>(j)].matrix();
      for (Index a = 0; a < n; ++a)
        for (Index b = a + 1; b < n; ++b) {
          const double v = root_n * m(a, b);
          sum[static_cast<std::size_t>(j)] += v;
          sum_sq[static_cast<std::size_t>(j)] += v * v;
        }
    }
  }

  const double count =
      static_cast<double>(reps) * static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
  std::vector<double> variances(static_cast<std::size_t>(k), 0.0);
  for (int j = 0; j < k; ++j) {
    const double mean = sum[static_cast<std::size_t>(j)] / count;
    variances[static_cast<std::size_t>(j)] =
        (sum_sq[static_cast<std::size_t>(j)] - count * mean * mean) / (count - 1.0);
  }
  return variances;
}

}  // namespace blockspec
