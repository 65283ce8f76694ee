#include "blockspec/wigner.hpp"

#include <cmath>

#include "blockspec/structure.hpp"

namespace blockspec {

namespace {

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

double normal_pdf(double z) {
  return std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi);
}

}  // namespace

TruncationParams truncation_params(const WignerSpec& spec, double cutoff) {
  validate(spec);
  if (!(cutoff > 0.0) || !std::isfinite(cutoff))
    throw ConfigError("truncation cutoff must be positive and finite");
  const double s2 = spec.sigma2;
  const double sigma = std::sqrt(s2);

  double sigma_c2;
  if (spec.flavor == Flavor::kReal) {
    switch (spec.entry_law) {
      case EntryLaw::kGaussian: {
        // E[x^2 1(|x| <= c)] = s2 (2 Phi(c/s) - 1 - 2 (c/s) phi(c/s)).
        const double z = cutoff / sigma;
        sigma_c2 = s2 * (2.0 * normal_cdf(z) - 1.0 - 2.0 * z * normal_pdf(z));
        break;
      }
      case EntryLaw::kUniform: {
        // Uniform on [-a, a] with a = sigma sqrt(3):
        // E[x^2 1(|x| <= c)] = c^3 / (3a) below a, s2 beyond.
        const double a = sigma * std::sqrt(3.0);
        sigma_c2 = cutoff >= a ? s2 : cutoff * cutoff * cutoff / (3.0 * a);
        break;
      }
      case EntryLaw::kRademacher: {
        // All mass sits at |x| = sigma; cutting below it removes everything
        // and the standardized entry is undefined.
        if (cutoff < sigma)
          throw ConfigError(
              "truncation cutoff below the entry magnitude leaves zero variance");
        sigma_c2 = s2;
        break;
      }
      default:
        throw ConfigError("truncation: unknown entry law");
    }
  } else {
    if (spec.entry_law != EntryLaw::kGaussian)
      throw ConfigError(
          "truncation variance is only available analytically for complex gaussian entries");
    // |z|^2 is exponential with mean s2:
    // E[|z|^2 1(|z| <= c)] = s2 (1 - e^{-t}(1 + t)), t = c^2/s2.
    const double t = cutoff * cutoff / s2;
    sigma_c2 = s2 * (1.0 - std::exp(-t) * (1.0 + t));
  }

  if (!(sigma_c2 > 0.0))
    throw ConfigError("truncation cutoff leaves zero variance");
  return TruncationParams{cutoff, sigma_c2};
}

std::vector<Hermitian<double>> sample_dependent_scalar_blocks(int k, Index n,
                                                              const Seed& seed) {
  if (k < 1) throw ConfigError("dependent wigner: k must be >= 1");
  const int symbols = k / 2 + 1;
  return sample_wigner_family<double>(WignerSpec{n, 1.0, Flavor::kReal,
                                                 DiagonalLaw::kGaussian,
                                                 EntryLaw::kGaussian},
                                      seed, symbols);
}

DependentWignerDraw build_dependent_wigner(int k, Index n, const Seed& seed) {
  DependentWignerDraw draw;
  draw.k = k;
  draw.n = n;
  draw.blocks = sample_dependent_scalar_blocks(k, n, seed);

  // Entry (i k + r, j k + s) repeats entry (i, j) of the scalar matrix for
  // the circulant symbol of (r, s); the same 1/sqrt(k) as the block
  // circulant keeps the two layouts exactly permutation-conjugate.
  const double inv_sqrt_k = 1.0 / std::sqrt(static_cast<double>(k));
  RealMatrix big(static_cast<Index>(k) * n, static_cast<Index>(k) * n);
  for (Index i = 0; i < n; ++i)
    for (int r = 0; r < k; ++r)
      for (Index j = 0; j < n; ++j)
        for (int s = 0; s < k; ++s) {
          const int sym = circulant_symbol(k, r, s);
          big(i * k + r, j * k + s) =
              inv_sqrt_k * draw.blocks[static_cast<std::size_t>(sym)].matrix()(i, j);
        }
  draw.matrix = Hermitian<double>::assume(std::move(big));
  return draw;
}

EntrySource dependent_entry_source(int k, Index n, Index row, Index col) {
  if (k < 1 || n < 1) throw ConfigError("dependent wigner: bad dimensions");
  const Index dim = static_cast<Index>(k) * n;
  if (row < 0 || col < 0 || row >= dim || col >= dim)
    throw ConfigError("dependent wigner: entry out of range");
  const Index i = row / k;
  const Index j = col / k;
  const int r = static_cast<int>(row % k);
  const int s = static_cast<int>(col % k);
  return EntrySource{std::min(i, j), std::max(i, j), circulant_symbol(k, r, s)};
}

}  // namespace blockspec
