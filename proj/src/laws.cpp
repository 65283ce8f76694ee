#include "blockspec/laws.hpp"

#include <algorithm>
#include <numbers>

#include "blockspec/nc_pairing.hpp"

namespace blockspec {

namespace {

void check_law(const Semicircle& law) {
  if (!(law.variance > 0.0))
    throw ConfigError("semicircle law requires variance > 0");
}

double binomial(int n, int r) {
  double b = 1.0;
  for (int i = 1; i <= r; ++i)
    b = b * static_cast<double>(n - r + i) / static_cast<double>(i);
  return b;
}

}  // namespace

double semicircle_pdf(const Semicircle& law, double x) {
  check_law(law);
  const double d = x - law.center;
  const double disc = 4.0 * law.variance - d * d;
  if (disc <= 0.0) return 0.0;
  return std::sqrt(disc) / (2.0 * std::numbers::pi * law.variance);
}

double semicircle_cdf(const Semicircle& law, double x) {
  check_law(law);
  // With u = (x - center)/(2 sigma) in [-1, 1]:
  //   F = 1/2 + (u sqrt(1 - u^2) + asin u) / pi.
  const double u = std::clamp((x - law.center) / law.radius(), -1.0, 1.0);
  return 0.5 + (u * std::sqrt(1.0 - u * u) + std::asin(u)) / std::numbers::pi;
}

double semicircle_moment(const Semicircle& law, int order) {
  check_law(law);
  if (order < 0 || order > 60)
    throw ConfigError("semicircle_moment requires order in [0, 60]");
  // E X^s = sum_r binom(s, r) center^{s-r} * C_{r/2} variance^{r/2}
  // over even r (odd central moments vanish).
  double total = 0.0;
  for (int r = 0; r <= order; r += 2) {
    const double central = static_cast<double>(catalan(r / 2)) *
                           std::pow(law.variance, r / 2);
    total += binomial(order, r) * std::pow(law.center, order - r) * central;
  }
  return total;
}

SemicircleMixture::SemicircleMixture(std::vector<MixtureComponent> components)
    : components_(std::move(components)) {
  if (components_.empty())
    throw ConfigError("mixture requires at least one component");
  double total = 0.0;
  for (const MixtureComponent& c : components_) {
    if (!(c.weight > 0.0)) throw ConfigError("mixture weights must be positive");
    check_law(c.law);
    total += c.weight;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw ConfigError("mixture weights must sum to 1");
}

double SemicircleMixture::support_radius() const {
  double r = 0.0;
  for (const MixtureComponent& c : components_)
    r = std::max(r, std::abs(c.law.center) + c.law.radius());
  return r;
}

double mixture_pdf(const SemicircleMixture& law, double x) {
  double f = 0.0;
  for (const MixtureComponent& c : law.components())
    f += c.weight * semicircle_pdf(c.law, x);
  return f;
}

double mixture_cdf(const SemicircleMixture& law, double x) {
  double f = 0.0;
  for (const MixtureComponent& c : law.components())
    f += c.weight * semicircle_cdf(c.law, x);
  return f;
}

double mixture_moment(const SemicircleMixture& law, int order) {
  double m = 0.0;
  for (const MixtureComponent& c : law.components())
    m += c.weight * semicircle_moment(c.law, order);
  return m;
}

SemicircleMixture semicircle_law(double center, double variance) {
  return SemicircleMixture({{1.0, Semicircle{center, variance}}});
}

SemicircleMixture block_circulant_limit(int k) {
  if (k < 2) throw ConfigError("block_circulant_limit requires k >= 2");
  const double kd = static_cast<double>(k);
  if (k % 2 == 1) {
    return SemicircleMixture({
        {(kd - 1.0) / kd, Semicircle{0.0, (kd - 1.0) / kd}},
        {1.0 / kd, Semicircle{0.0, (2.0 * kd - 1.0) / kd}},
    });
  }
  if (k == 2) {
    // The bulk component has weight (k-2)/k = 0; only the standard
    // semicircle remains.
    return semicircle_law(0.0, 1.0);
  }
  return SemicircleMixture({
      {(kd - 2.0) / kd, Semicircle{0.0, (kd - 2.0) / kd}},
      {2.0 / kd, Semicircle{0.0, (2.0 * kd - 2.0) / kd}},
  });
}

SemicircleMixture circulant_limit(int k) {
  if (k < 1) throw ConfigError("circulant_limit requires k >= 1");
  if (k == 1) return semicircle_law(0.0, 1.0);
  return block_circulant_limit(k);
}

double cos2_sum(int n, double x) {
  if (n < 0) throw ConfigError("cos2_sum requires n >= 0");
  const double s = std::sin(x);
  if (std::abs(s) < 1e-6) {
    double total = 0.0;
    for (int l = 0; l <= n; ++l) {
      const double c = std::cos(static_cast<double>(l) * x);
      total += c * c;
    }
    return total;
  }
  return 0.5 * (static_cast<double>(n) + 1.5 +
                std::sin((2.0 * static_cast<double>(n) + 1.0) * x) / (2.0 * s));
}

double circulant_component_variance(int k, int j) {
  if (k < 1) throw ConfigError("circulant_component_variance requires k >= 1");
  if (j < 1 || j > k)
    throw ConfigError("circulant_component_variance requires 1 <= j <= k");
  const double kd = static_cast<double>(k);
  const double theta =
      2.0 * std::numbers::pi * static_cast<double>(j - 1) / kd;

  double via_identity;
  double closed;
  if (k % 2 == 1) {
    const int m = (k - 1) / 2;
    // 1 from the diagonal symbol, 4 cos^2 from each doubled cosine weight.
    via_identity = (1.0 + 4.0 * (cos2_sum(m, theta) - 1.0)) / kd;
    closed = j == 1 ? (2.0 * kd - 1.0) / kd : (kd - 1.0) / kd;
  } else {
    const int m = k / 2 - 1;
    const double last = std::cos(std::numbers::pi * static_cast<double>(j - 1));
    via_identity =
        (1.0 + 4.0 * (cos2_sum(m, theta) - 1.0) + last * last) / kd;
    closed = (j == 1 || j == k / 2 + 1) ? (2.0 * kd - 2.0) / kd
                                        : (kd - 2.0) / kd;
  }
  if (std::abs(via_identity - closed) > 1e-10)
    throw ContractError("cosine-sum variance disagrees with closed form");
  return closed;
}

}  // namespace blockspec
