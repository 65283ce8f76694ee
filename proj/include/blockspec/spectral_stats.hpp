#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "blockspec/errors.hpp"
#include "blockspec/linalg.hpp"

namespace blockspec {

// Eigenvalues pooled across replicates, held sorted: the empirical
// spectral distribution of an ensemble.
class SpectralSample {
 public:
  // Takes raw pooled eigenvalues (sorted internally); their count must be
  // replicate_count * matrix_dim.
  SpectralSample(std::vector<double> values, int replicate_count, Index matrix_dim);

  const std::vector<double>& values() const { return values_; }
  int replicate_count() const { return replicate_count_; }
  Index matrix_dim() const { return matrix_dim_; }
  std::size_t size() const { return values_.size(); }

  double min() const { return values_.front(); }
  double max() const { return values_.back(); }

  // Fraction of pooled eigenvalues <= x.
  double empirical_cdf(double x) const;

 private:
  std::vector<double> values_;
  int replicate_count_ = 0;
  Index matrix_dim_ = 0;
};

SpectralSample pool_spectra(const std::vector<Spectrum>& spectra);

// m^{-1} sum lambda_i^order over the pooled sample.
double empirical_moment(const SpectralSample& sample, int order);

// One-sample Kolmogorov-Smirnov distance sup_x |F_m(x) - F(x)| against a
// continuous reference cdf.
double ks_distance(const SpectralSample& sample,
                   const std::function<double(double)>& cdf);

// Density histogram: `edges` has bins+1 ascending entries and `densities`
// integrates to 1 over the covered range.
struct Histogram {
  std::vector<double> edges;
  std::vector<double> densities;

  int bins() const { return static_cast<int>(densities.size()); }
  double mass() const;
};

// Bins the sample over `range` (default: its own min/max; a degenerate
// range is widened by 1/2 on both sides).  Values outside the range are
// dropped and the densities normalize over what remains.
Histogram histogram(const SpectralSample& sample, int bins,
                    std::optional<std::pair<double, double>> range = std::nullopt);

// Symmetric half-width that comfortably frames a spectrum: max(3, max |lambda|).
double plot_halfwidth(const SpectralSample& sample);

}  // namespace blockspec
