#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>

#include "blockspec/laws.hpp"
#include "blockspec/rng.hpp"

using namespace blockspec;

namespace {

double simpson(const std::function<double(double)>& f, double a, double b, int n) {
  double acc = f(a) + f(b);
  const double h = (b - a) / n;
  for (int i = 1; i < n; ++i) acc += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  return acc * h / 3.0;
}

// Quadrature oracle with the edge singularities removed: substituting
// x = center + 2 sigma sin(theta) pulls the density back to
// (2/pi) cos^2(theta), which Simpson integrates to machine accuracy.
double angular_integral(const Semicircle& law, const std::function<double(double)>& g,
                        double upper_u) {
  const double two_sigma = law.radius();
  const auto integrand = [&](double th) {
    const double x = law.center + two_sigma * std::sin(th);
    const double c = std::cos(th);
    return 2.0 / std::numbers::pi * g(x) * c * c;
  };
  return simpson(integrand, -std::numbers::pi / 2, std::asin(upper_u), 20000);
}

double quadrature_moment(const Semicircle& law, int order) {
  return angular_integral(law, [&](double x) { return std::pow(x, order); }, 1.0);
}

double quadrature_cdf(const Semicircle& law, double x) {
  const double u = std::clamp((x - law.center) / law.radius(), -1.0, 1.0);
  return angular_integral(law, [](double) { return 1.0; }, u);
}

}  // namespace

TEST_CASE("semicircle density: support, peak, symmetry, total mass") {
  const Semicircle law{0.0, 1.0};
  CHECK(semicircle_pdf(law, -2.0000001) == 0.0);
  CHECK(semicircle_pdf(law, 2.0000001) == 0.0);
  CHECK(semicircle_pdf(law, 0.0) == doctest::Approx(1.0 / std::numbers::pi));
  CHECK(semicircle_pdf(law, 0.7) == doctest::Approx(semicircle_pdf(law, -0.7)));
  // Direct Simpson converges slowly at the sqrt edges; the angular oracle
  // nails the mass.
  const double mass =
      simpson([&](double x) { return semicircle_pdf(law, x); }, -2, 2, 40000);
  CHECK(mass == doctest::Approx(1.0).epsilon(2e-6));
  CHECK(quadrature_moment(law, 0) == doctest::Approx(1.0).epsilon(1e-12));

  const Semicircle wide{1.0, 4.0};
  CHECK(semicircle_pdf(wide, 1.0 + 4.0 + 1e-9) == 0.0);  // radius 2 sigma = 4
  CHECK(semicircle_pdf(wide, 1.0) ==
        doctest::Approx(1.0 / (std::numbers::pi * 2.0)));  // 1/(pi sigma)
}

TEST_CASE("semicircle cdf matches quadrature of the density") {
  for (const Semicircle law : {Semicircle{0.0, 1.0}, Semicircle{-1.5, 2.25}}) {
    CHECK(semicircle_cdf(law, law.center - law.radius() - 1) == 0.0);
    CHECK(semicircle_cdf(law, law.center + law.radius() + 1) == 1.0);
    CHECK(semicircle_cdf(law, law.center) == doctest::Approx(0.5).epsilon(1e-12));
    for (double frac : {-0.9, -0.5, -0.2, 0.3, 0.7, 0.95}) {
      const double x = law.center + frac * law.radius();
      CHECK(semicircle_cdf(law, x) ==
            doctest::Approx(quadrature_cdf(law, x)).epsilon(1e-10));
    }
  }
}

TEST_CASE("semicircle cdf is monotone") {
  const Semicircle law{0.5, 1.7};
  double prev = -1;
  for (int i = 0; i <= 100; ++i) {
    const double x = law.center - 3 + 6.0 * i / 100;
    const double f = semicircle_cdf(law, x);
    CHECK(f >= prev);
    prev = f;
  }
}

TEST_CASE("semicircle moments: catalan central moments and shifted laws") {
  const Semicircle std_law{0.0, 1.0};
  CHECK(semicircle_moment(std_law, 0) == 1.0);
  CHECK(semicircle_moment(std_law, 1) == 0.0);
  CHECK(semicircle_moment(std_law, 2) == doctest::Approx(1.0));
  CHECK(semicircle_moment(std_law, 4) == doctest::Approx(2.0));
  CHECK(semicircle_moment(std_law, 6) == doctest::Approx(5.0));
  CHECK(semicircle_moment(std_law, 8) == doctest::Approx(14.0));

  const Semicircle scaled{0.0, 2.25};
  CHECK(semicircle_moment(scaled, 2) == doctest::Approx(2.25));
  CHECK(semicircle_moment(scaled, 4) == doctest::Approx(2 * 2.25 * 2.25));

  const Semicircle shifted{1.5, 2.0};
  CHECK(semicircle_moment(shifted, 1) == doctest::Approx(1.5));
  CHECK(semicircle_moment(shifted, 2) == doctest::Approx(1.5 * 1.5 + 2.0));

  CHECK_THROWS_AS(semicircle_moment(std_law, -1), ConfigError);
  CHECK_THROWS_AS(semicircle_moment(std_law, 61), ConfigError);
}

TEST_CASE("semicircle moments match quadrature") {
  const Semicircle law{0.8, 1.3};
  for (int order = 0; order <= 8; ++order)
    CHECK(semicircle_moment(law, order) ==
          doctest::Approx(quadrature_moment(law, order)).epsilon(1e-10));
}

TEST_CASE("mixture validation") {
  CHECK_THROWS_AS(SemicircleMixture({}), ConfigError);
  CHECK_THROWS_AS(SemicircleMixture({{0.0, Semicircle{0, 1}}}), ConfigError);
  CHECK_THROWS_AS(SemicircleMixture({{-0.5, Semicircle{0, 1}}, {1.5, Semicircle{0, 1}}}),
                  ConfigError);
  CHECK_THROWS_AS(SemicircleMixture({{0.6, Semicircle{0, 1}}, {0.6, Semicircle{0, 1}}}),
                  ConfigError);
  CHECK_THROWS_AS(SemicircleMixture({{1.0, Semicircle{0, 0.0}}}), ConfigError);
  CHECK_NOTHROW(SemicircleMixture({{0.25, Semicircle{0, 1}}, {0.75, Semicircle{1, 2}}}));
}

TEST_CASE("mixture functions are weighted sums") {
  const SemicircleMixture mix({{0.25, Semicircle{-1, 1}}, {0.75, Semicircle{2, 4}}});
  for (double x : {-2.0, -0.5, 0.0, 1.0, 3.0}) {
    CHECK(mixture_pdf(mix, x) ==
          doctest::Approx(0.25 * semicircle_pdf(Semicircle{-1, 1}, x) +
                          0.75 * semicircle_pdf(Semicircle{2, 4}, x)));
    CHECK(mixture_cdf(mix, x) ==
          doctest::Approx(0.25 * semicircle_cdf(Semicircle{-1, 1}, x) +
                          0.75 * semicircle_cdf(Semicircle{2, 4}, x)));
  }
  for (int order = 0; order <= 6; ++order)
    CHECK(mixture_moment(mix, order) ==
          doctest::Approx(0.25 * semicircle_moment(Semicircle{-1, 1}, order) +
                          0.75 * semicircle_moment(Semicircle{2, 4}, order)));
  CHECK(mix.support_radius() == doctest::Approx(2.0 + 4.0));
  const double mass =
      simpson([&](double x) { return mixture_pdf(mix, x); }, -7, 7, 40000);
  CHECK(mass == doctest::Approx(1.0).epsilon(2e-6));
}

TEST_CASE("block circulant limit: component table") {
  CHECK_THROWS_AS(block_circulant_limit(1), ConfigError);
  CHECK_THROWS_AS(block_circulant_limit(0), ConfigError);

  // k = 2 degenerates to the standard semicircle.
  const auto k2 = block_circulant_limit(2);
  REQUIRE(k2.components().size() == 1);
  CHECK(k2.components()[0].weight == 1.0);
  CHECK(k2.components()[0].law.variance == 1.0);
  CHECK(k2.components()[0].law.center == 0.0);

  // Odd k: bulk (k-1)/k with variance (k-1)/k, spike 1/k with (2k-1)/k.
  const auto k5 = block_circulant_limit(5);
  REQUIRE(k5.components().size() == 2);
  CHECK(k5.components()[0].weight == doctest::Approx(0.8));
  CHECK(k5.components()[0].law.variance == doctest::Approx(0.8));
  CHECK(k5.components()[1].weight == doctest::Approx(0.2));
  CHECK(k5.components()[1].law.variance == doctest::Approx(1.8));

  // Even k: bulk (k-2)/k with variance (k-2)/k, spike 2/k with (2k-2)/k.
  const auto k4 = block_circulant_limit(4);
  REQUIRE(k4.components().size() == 2);
  CHECK(k4.components()[0].weight == doctest::Approx(0.5));
  CHECK(k4.components()[0].law.variance == doctest::Approx(0.5));
  CHECK(k4.components()[1].weight == doctest::Approx(0.5));
  CHECK(k4.components()[1].law.variance == doctest::Approx(1.5));
}

TEST_CASE("block circulant limit has unit variance for every k") {
  for (int k = 2; k <= 12; ++k)
    CHECK(mixture_moment(block_circulant_limit(k), 2) ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("fourth moments of the limit laws, frozen") {
  CHECK(mixture_moment(block_circulant_limit(5), 4) == doctest::Approx(2.32).epsilon(1e-12));
  CHECK(mixture_moment(block_circulant_limit(4), 4) == doctest::Approx(2.5).epsilon(1e-12));
  CHECK(mixture_moment(block_circulant_limit(2), 4) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("circulant_limit extends to the single-block case") {
  const auto k1 = circulant_limit(1);
  REQUIRE(k1.components().size() == 1);
  CHECK(k1.components()[0].law.variance == 1.0);
  CHECK_THROWS_AS(circulant_limit(0), ConfigError);
  // Agrees with block_circulant_limit beyond k = 1.
  CHECK(mixture_moment(circulant_limit(6), 4) ==
        mixture_moment(block_circulant_limit(6), 4));
}

TEST_CASE("cos2_sum hand values") {
  CHECK(cos2_sum(0, 0.0) == doctest::Approx(1.0));
  CHECK(cos2_sum(0, 1.234) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(cos2_sum(1, std::numbers::pi / 2) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(cos2_sum(3, 0.0) == doctest::Approx(4.0));
  CHECK_THROWS_AS(cos2_sum(-1, 0.5), ConfigError);
}

TEST_CASE("cos2_sum equals the direct sum on random arguments") {
  for (int trial = 0; trial < 200; ++trial) {
    const RandomBlock b = random_block(Seed{55, 0}, static_cast<std::uint64_t>(trial));
    const int n = static_cast<int>(b.lo % 40);
    const double x = 2.0 * std::numbers::pi * uniform01(b.hi);
    double direct = 0.0;
    for (int l = 0; l <= n; ++l) {
      const double c = std::cos(l * x);
      direct += c * c;
    }
    CHECK(cos2_sum(n, x) == doctest::Approx(direct).epsilon(1e-10));
  }
}

TEST_CASE("component variances: hand table for small k") {
  // k = 1: single member, variance 1.
  CHECK(circulant_component_variance(1, 1) == doctest::Approx(1.0));
  // k = 2: both members have variance 1.
  CHECK(circulant_component_variance(2, 1) == doctest::Approx(1.0));
  CHECK(circulant_component_variance(2, 2) == doctest::Approx(1.0));
  // k = 3: 5/3 then 2/3 twice.
  CHECK(circulant_component_variance(3, 1) == doctest::Approx(5.0 / 3.0));
  CHECK(circulant_component_variance(3, 2) == doctest::Approx(2.0 / 3.0));
  CHECK(circulant_component_variance(3, 3) == doctest::Approx(2.0 / 3.0));
  // k = 4: 3/2, 1/2, 3/2, 1/2.
  CHECK(circulant_component_variance(4, 1) == doctest::Approx(1.5));
  CHECK(circulant_component_variance(4, 2) == doctest::Approx(0.5));
  CHECK(circulant_component_variance(4, 3) == doctest::Approx(1.5));
  CHECK(circulant_component_variance(4, 4) == doctest::Approx(0.5));
  // k = 5: 9/5 then 4/5 four times.
  CHECK(circulant_component_variance(5, 1) == doctest::Approx(1.8));
  for (int j = 2; j <= 5; ++j)
    CHECK(circulant_component_variance(5, j) == doctest::Approx(0.8));

  CHECK_THROWS_AS(circulant_component_variance(4, 0), ConfigError);
  CHECK_THROWS_AS(circulant_component_variance(4, 5), ConfigError);
  CHECK_THROWS_AS(circulant_component_variance(0, 1), ConfigError);
}

TEST_CASE("component variances sum to k and stay consistent up to k = 12") {
  for (int k = 1; k <= 12; ++k) {
    double total = 0.0;
    for (int j = 1; j <= k; ++j) total += circulant_component_variance(k, j);
    CHECK(total == doctest::Approx(static_cast<double>(k)).epsilon(1e-10));
  }
}

TEST_CASE("member variances mirror around the fold") {
  for (int k = 2; k <= 11; ++k)
    for (int j = 2; j <= k; ++j)
      CHECK(circulant_component_variance(k, j) ==
            doctest::Approx(circulant_component_variance(k, k + 2 - j)).epsilon(1e-12));
}
