#pragma once

#include <cmath>
#include <vector>

#include "blockspec/errors.hpp"

namespace blockspec {

// Semicircle law with mean `center` and variance `variance`: density
// (2 pi variance)^{-1} sqrt(4 variance - (x - center)^2) supported on
// [center - 2 sqrt(variance), center + 2 sqrt(variance)].
struct Semicircle {
  double center = 0.0;
  double variance = 1.0;

  double sigma() const { return std::sqrt(variance); }
  double radius() const { return 2.0 * sigma(); }
};

double semicircle_pdf(const Semicircle& law, double x);
double semicircle_cdf(const Semicircle& law, double x);

// Raw moment E X^order; central moments are Catalan numbers scaled by
// variance^{order/2}.  0 <= order <= 60.
double semicircle_moment(const Semicircle& law, int order);

struct MixtureComponent {
  double weight = 1.0;
  Semicircle law;
};

// Finite convex combination of semicircle laws.
class SemicircleMixture {
 public:
  // Requires nonempty components, strictly positive weights summing to 1
  // within 1e-12, strictly positive variances.
  explicit SemicircleMixture(std::vector<MixtureComponent> components);

  const std::vector<MixtureComponent>& components() const { return components_; }

  // Outer edge of the support: max |center| + 2 sigma over components.
  double support_radius() const;

 private:
  std::vector<MixtureComponent> components_;
};

double mixture_pdf(const SemicircleMixture& law, double x);
double mixture_cdf(const SemicircleMixture& law, double x);
double mixture_moment(const SemicircleMixture& law, int order);

// Single-component convenience wrapper.
SemicircleMixture semicircle_law(double center, double variance);

// Spectral limit of the symmetric block circulant with k >= 2 rows of
// independent Wigner blocks (1/sqrt(k) scaling):
//   odd k:   (k-1)/k parts semicircle(0, (k-1)/k)  +  1/k  parts semicircle(0, (2k-1)/k)
//   even k:  (k-2)/k parts semicircle(0, (k-2)/k)  +  2/k  parts semicircle(0, (2k-2)/k)
// For k = 2 the first weight vanishes and the law degenerates to the
// standard semicircle.
SemicircleMixture block_circulant_limit(int k);

// Same limit extended to k = 1, where the matrix is a single Wigner block
// and the law is the standard semicircle.
SemicircleMixture circulant_limit(int k);

// sum_{l=0}^{n} cos^2(l x), evaluated in closed form
//   (n + 3/2 + sin((2n+1) x) / (2 sin x)) / 2
// with a direct fallback near sin x = 0.
double cos2_sum(int n, double x);

// Variance of the j-th member (1-based, j in [1, k]) of the reduced
// family of the symmetric block circulant: each member is a single Wigner
// matrix whose off-diagonal entry variance is
//   (1 + 4 sum_{l=2}^{ceil(k/2)} cos^2(2 pi (l-1)(j-1)/k) [+1 if k even]) / k.
// The cosine-sum evaluation is checked against the closed form
// ((2k-1)/k for j = 1, (k-1)/k otherwise, for odd k; even k analogous)
// and the closed form is returned.
double circulant_component_variance(int k, int j);

}  // namespace blockspec
