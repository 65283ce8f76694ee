#include "blockspec/spectral_stats.hpp"

#include <algorithm>
#include <cmath>

namespace blockspec {

SpectralSample::SpectralSample(std::vector<double> values, int replicate_count,
                               Index matrix_dim)
    : values_(std::move(values)),
      replicate_count_(replicate_count),
      matrix_dim_(matrix_dim) {
  if (replicate_count_ < 1 || matrix_dim_ < 1)
    throw ConfigError("spectral sample requires positive replicate count and dimension");
  if (values_.size() != static_cast<std::size_t>(replicate_count_) *
                            static_cast<std::size_t>(matrix_dim_))
    throw ConfigError("spectral sample size must be replicates * dimension");
  for (double v : values_)
    if (!std::isfinite(v)) throw ConfigError("spectral sample must be finite");
  std::sort(values_.begin(), values_.end());
}

double SpectralSample::empirical_cdf(double x) const {
  const auto it = std::upper_bound(values_.begin(), values_.end(), x);
  return static_cast<double>(it - values_.begin()) /
         static_cast<double>(values_.size());
}

SpectralSample pool_spectra(const std::vector<Spectrum>& spectra) {
  if (spectra.empty()) throw ConfigError("pool_spectra requires at least one spectrum");
  const Index dim = spectra.front().size();
  std::vector<double> pooled;
  pooled.reserve(spectra.size() * static_cast<std::size_t>(dim));
  for (const Spectrum& s : spectra) {
    if (s.size() != dim)
      throw ConfigError("pool_spectra: spectra must share one dimension");
    for (Index i = 0; i < s.size(); ++i) pooled.push_back(s.values(i));
  }
  return SpectralSample(std::move(pooled), static_cast<int>(spectra.size()), dim);
}

double empirical_moment(const SpectralSample& sample, int order) {
  if (order < 0) throw ConfigError("empirical_moment requires order >= 0");
  if (order == 0) return 1.0;
  double total = 0.0;
  for (double v : sample.values()) total += std::pow(v, order);
  return total / static_cast<double>(sample.size());
}

double ks_distance(const SpectralSample& sample,
                   const std::function<double(double)>& cdf) {
  // With sorted values, the supremum is attained just before or at a data
  // point: compare F against both i/m and (i+1)/m at each x_i.  Ties only
  // shrink the deviation already counted at the run's ends.
  const auto& xs = sample.values();
  const double m = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = cdf(xs[i]);
    if (!(f >= 0.0 && f <= 1.0))
      throw ConfigError("ks_distance: reference cdf must map into [0, 1]");
    d = std::max(d, f - static_cast<double>(i) / m);
    d = std::max(d, static_cast<double>(i + 1) / m - f);
  }
  return d;
}

double Histogram::mass() const {
  double total = 0.0;
  for (int b = 0; b < bins(); ++b)
    total += densities[static_cast<std::size_t>(b)] *
             (edges[static_cast<std::size_t>(b) + 1] - edges[static_cast<std::size_t>(b)]);
  return total;
}

Histogram histogram(const SpectralSample& sample, int bins,
                    std::optional<std::pair<double, double>> range) {
  if (bins < 1) throw ConfigError("histogram requires bins >= 1");
  double lo;
  double hi;
  if (range) {
    lo = range->first;
    hi = range->second;
    if (!(lo < hi)) throw ConfigError("histogram range must have lo < hi");
  } else {
    lo = sample.min();
    hi = sample.max();
    if (lo == hi) {
      lo -= 0.5;
      hi += 0.5;
    }
  }

  std::vector<std::size_t> counts(static_cast<std::size_t>(bins), 0);
  std::size_t in_range = 0;
  const double width = hi - lo;
  for (double v : sample.values()) {
    if (v < lo || v > hi) continue;
    const auto b = std::min<std::size_t>(
        static_cast<std::size_t>(bins) - 1,
        static_cast<std::size_t>((v - lo) / width * static_cast<double>(bins)));
    ++counts[b];
    ++in_range;
  }
  if (in_range == 0) throw ConfigError("histogram range contains no sample points");

  Histogram h;
  h.edges.resize(static_cast<std::size_t>(bins) + 1);
  for (int b = 0; b <= bins; ++b)
    h.edges[static_cast<std::size_t>(b)] =
        lo + width * static_cast<double>(b) / static_cast<double>(bins);
  h.densities.resize(static_cast<std::size_t>(bins));
  const double bin_width = width / static_cast<double>(bins);
  for (int b = 0; b < bins; ++b)
    h.densities[static_cast<std::size_t>(b)] =
        static_cast<double>(counts[static_cast<std::size_t>(b)]) /
        (static_cast<double>(in_range) * bin_width);
  return h;
}

double plot_halfwidth(const SpectralSample& sample) {
  return std::max(3.0, std::max(std::abs(sample.min()), std::abs(sample.max())));
}

}  // namespace blockspec
