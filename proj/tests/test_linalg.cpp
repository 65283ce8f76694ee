#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "blockspec/hermitian.hpp"
#include "blockspec/linalg.hpp"
#include "blockspec/rng.hpp"

using namespace blockspec;

namespace {

RealMatrix random_matrix(Index rows, Index cols, const Seed& seed) {
  RealMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j)
      m(i, j) = normal_pair(seed, static_cast<std::uint64_t>(i) *
                                      static_cast<std::uint64_t>(cols) +
                                  static_cast<std::uint64_t>(j))
                    .first;
  return m;
}

Hermitian<double> random_hermitian(Index n, const Seed& seed) {
  return Hermitian<double>::symmetrized(random_matrix(n, n, seed));
}

ComplexMatrix random_complex_matrix(Index rows, Index cols, const Seed& seed) {
  ComplexMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) {
      const auto [re, im] = normal_pair(seed, static_cast<std::uint64_t>(i) *
                                                  static_cast<std::uint64_t>(cols) +
                                              static_cast<std::uint64_t>(j));
      m(i, j) = Complex(re, im);
    }
  return m;
}

}  // namespace

TEST_CASE("symmetrized averages the triangles and is exactly Hermitian") {
  const RealMatrix m = random_matrix(7, 7, Seed{11, 0});
  const auto h = Hermitian<double>::symmetrized(m);
  CHECK(is_exactly_hermitian(h.matrix()));
  for (Index i = 0; i < 7; ++i)
    for (Index j = 0; j < 7; ++j)
      CHECK(h.matrix()(i, j) == doctest::Approx((m(i, j) + m(j, i)) / 2).epsilon(1e-15));
}

TEST_CASE("symmetrized forces a real diagonal on complex input") {
  const ComplexMatrix m = random_complex_matrix(5, 5, Seed{12, 0});
  const auto h = Hermitian<Complex>::symmetrized(m);
  CHECK(is_exactly_hermitian(h.matrix()));
  for (Index i = 0; i < 5; ++i) {
    CHECK(h.matrix()(i, i).imag() == 0.0);
    CHECK(h.matrix()(i, i).real() == doctest::Approx(m(i, i).real()));
  }
}

TEST_CASE("enforce accepts rounding-level asymmetry and rejects real ones") {
  RealMatrix m = random_hermitian(6, Seed{13, 0}).matrix();
  m(1, 2) += 1e-14;
  CHECK_NOTHROW(Hermitian<double>::enforce(m));
  m(1, 2) += 1e-6;
  CHECK_THROWS_AS(Hermitian<double>::enforce(m), ConfigError);
}

TEST_CASE("enforce tolerance scales with the matrix magnitude") {
  RealMatrix m = 1000.0 * random_hermitian(4, Seed{14, 0}).matrix();
  const double scale = 1.0 + m.cwiseAbs().maxCoeff();
  m(0, 1) += 0.5 * kHermitianTolerance * scale;
  CHECK_NOTHROW(Hermitian<double>::enforce(m));
  m(0, 1) += 10.0 * kHermitianTolerance * scale;
  CHECK_THROWS_AS(Hermitian<double>::enforce(m), ConfigError);
}

TEST_CASE("Hermitian rejects non-square and empty input") {
  CHECK_THROWS_AS(Hermitian<double>::symmetrized(RealMatrix::Zero(2, 3)), ConfigError);
  CHECK_THROWS_AS(Hermitian<double>::assume(RealMatrix(0, 0)), ConfigError);
}

TEST_CASE("kronecker matches the 2x2 hand computation") {
  RealMatrix a(2, 2), b(2, 2);
  a << 1, 2, 3, 4;
  b << 0, 5, 6, 7;
  const RealMatrix k = kronecker(a, b);
  REQUIRE(k.rows() == 4);
  RealMatrix expected(4, 4);
  expected << 0, 5, 0, 10,
              6, 7, 12, 14,
              0, 15, 0, 20,
              18, 21, 24, 28;
  CHECK((k - expected).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("kronecker mixed-product identity") {
  const RealMatrix a = random_matrix(3, 3, Seed{21, 0});
  const RealMatrix b = random_matrix(2, 2, Seed{21, 1});
  const RealMatrix c = random_matrix(3, 3, Seed{21, 2});
  const RealMatrix d = random_matrix(2, 2, Seed{21, 3});
  const RealMatrix lhs = kronecker(a, b) * kronecker(c, d);
  const RealMatrix rhs = kronecker(RealMatrix(a * c), RealMatrix(b * d));
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("commutation matrix carries vec(A) to vec(A^T)") {
  const Index p = 3, q = 4;
  const RealMatrix a = random_matrix(p, q, Seed{22, 0});
  const RealMatrix k = commutation_matrix(p, q);
  const RealVector va = Eigen::Map<const RealVector>(a.data(), p * q);
  const RealMatrix at = a.transpose();
  const RealVector vat = Eigen::Map<const RealVector>(at.data(), p * q);
  CHECK((RealVector(k * va) - vat).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("commutation matrices are inverse transposes of each other") {
  const RealMatrix kpq = commutation_matrix(3, 5);
  const RealMatrix kqp = commutation_matrix(5, 3);
  CHECK((RealMatrix(kpq * kqp) - RealMatrix::Identity(15, 15)).cwiseAbs().maxCoeff() == 0.0);
  CHECK((kqp - RealMatrix(kpq.transpose())).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("conjugation by commutation matrices swaps Kronecker factors exactly") {
  const RealMatrix a = random_matrix(3, 3, Seed{23, 0});
  const RealMatrix b = random_matrix(4, 4, Seed{23, 1});
  CHECK(commute_kron_residual(a, b) == 0.0);
}

TEST_CASE("commutation_conjugate agrees with explicit matrix conjugation") {
  const Index p = 2, q = 3;
  const RealMatrix m = random_matrix(p * q, p * q, Seed{24, 0});
  const RealMatrix k = commutation_matrix(p, q);
  const RealMatrix direct = k * m * k.transpose();
  CHECK((commutation_conjugate(m, p, q) - direct).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("eigenvalues of a diagonal matrix are its sorted entries") {
  RealMatrix d = RealMatrix::Zero(4, 4);
  d.diagonal() << 3.0, -1.0, 2.5, 0.0;
  const Spectrum s = eigenvalues(Hermitian<double>::assume(d));
  REQUIRE(s.size() == 4);
  CHECK(s.values(0) == doctest::Approx(-1.0));
  CHECK(s.values(1) == doctest::Approx(0.0));
  CHECK(s.values(2) == doctest::Approx(2.5));
  CHECK(s.values(3) == doctest::Approx(3.0));
  CHECK(s.min() == doctest::Approx(-1.0));
  CHECK(s.max() == doctest::Approx(3.0));
}

TEST_CASE("eigenvalues of [[a,b],[b,a]] are a -+ b") {
  RealMatrix m(2, 2);
  m << 2.0, 0.75, 0.75, 2.0;
  const Spectrum s = eigenvalues(Hermitian<double>::assume(m));
  CHECK(s.values(0) == doctest::Approx(1.25).epsilon(1e-12));
  CHECK(s.values(1) == doctest::Approx(2.75).epsilon(1e-12));
}

TEST_CASE("complex Hermitian eigenvalues") {
  ComplexMatrix m(2, 2);
  m << Complex(2, 0), Complex(0, 1), Complex(0, -1), Complex(2, 0);
  const Spectrum s = eigenvalues(Hermitian<Complex>::assume(m));
  CHECK(s.values(0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s.values(1) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("spectrum is consistent with trace and Frobenius norm") {
  const auto h = random_hermitian(12, Seed{25, 0});
  const Spectrum s = eigenvalues(h);
  CHECK(s.values.sum() == doctest::Approx(h.matrix().trace()).epsilon(1e-10));
  CHECK(s.values.squaredNorm() ==
        doctest::Approx(h.matrix().squaredNorm()).epsilon(1e-10));
}

TEST_CASE("schatten norm of the identity is 1 for every order") {
  const RealMatrix id = RealMatrix::Identity(5, 5);
  for (double p : {1.0, 2.0, 3.5, 8.0}) CHECK(schatten_norm(id, p) == doctest::Approx(1.0));
}

TEST_CASE("schatten norm hand values on a diagonal matrix") {
  RealMatrix d = RealMatrix::Zero(2, 2);
  d.diagonal() << 3.0, -4.0;
  CHECK(schatten_norm(d, 1.0) == doctest::Approx(3.5).epsilon(1e-12));
  CHECK(schatten_norm(d, 2.0) == doctest::Approx(std::sqrt(12.5)).epsilon(1e-12));
  CHECK(operator_norm(Hermitian<double>::assume(d)) == doctest::Approx(4.0));
}

TEST_CASE("operator norm of a general matrix is its top singular value") {
  RealMatrix nilpotent = RealMatrix::Zero(2, 2);
  nilpotent(0, 1) = 2.0;  // singular values {2, 0}
  CHECK(operator_norm(nilpotent) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(schatten_norm(nilpotent, 1.0) == doctest::Approx(1.0).epsilon(1e-12));

  const RealMatrix m = random_matrix(5, 5, Seed{27, 0});
  const Hermitian<double> h = Hermitian<double>::symmetrized(m);
  CHECK(operator_norm(h.matrix()) == doctest::Approx(operator_norm(h)).epsilon(1e-12));
  CHECK(operator_norm(m) + 1e-12 >= schatten_norm(m, 4.0));
  CHECK_THROWS_AS(operator_norm(RealMatrix(RealMatrix::Zero(2, 3))), ConfigError);
}

TEST_CASE("schatten norm rejects p < 1 and non-square input") {
  const RealMatrix m = RealMatrix::Identity(3, 3);
  CHECK_THROWS_AS(schatten_norm(m, 0.5), ConfigError);
  CHECK_THROWS_AS(schatten_norm(RealMatrix(RealMatrix::Zero(2, 3)), 2.0), ConfigError);
}

TEST_CASE("schatten norm is absolutely homogeneous") {
  const RealMatrix m = random_matrix(6, 6, Seed{26, 0});
  for (double p : {1.0, 2.0, 4.0})
    CHECK(schatten_norm(RealMatrix(-2.5 * m), p) ==
          doctest::Approx(2.5 * schatten_norm(m, p)).epsilon(1e-12));
}

TEST_CASE("normalized trace is dominated by the Schatten chain") {
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = 2 + trial % 15;
    const auto h = random_hermitian(n, Seed{27, static_cast<std::uint64_t>(trial)});
    const double t = std::abs(normalized_trace(h.matrix()));
    const double s1 = schatten_norm(h.matrix(), 1.0);
    const double s2 = schatten_norm(h.matrix(), 2.0);
    const double s4 = schatten_norm(h.matrix(), 4.0);
    const double op = operator_norm(h);
    CHECK(t <= s1 * (1 + 1e-12) + 1e-12);
    CHECK(s1 <= s2 * (1 + 1e-12) + 1e-12);
    CHECK(s2 <= s4 * (1 + 1e-12) + 1e-12);
    CHECK(s4 <= op * (1 + 1e-12) + 1e-12);
  }
}

TEST_CASE("Hoelder inequality for products under the normalized norms") {
  for (int trial = 0; trial < 50; ++trial) {
    const Index n = 2 + trial % 10;
    const RealMatrix a = random_matrix(n, n, Seed{28, static_cast<std::uint64_t>(trial)});
    const RealMatrix b = random_matrix(n, n, Seed{29, static_cast<std::uint64_t>(trial)});
    CHECK(schatten_norm(RealMatrix(a * b), 1.0) <=
          schatten_norm(a, 2.0) * schatten_norm(b, 2.0) * (1 + 1e-10) + 1e-12);
    CHECK(schatten_norm(RealMatrix(a * b), 2.0) <=
          schatten_norm(a, 4.0) * schatten_norm(b, 4.0) * (1 + 1e-10) + 1e-12);
  }
}

TEST_CASE("matrix_power_trace matches spectral power sums") {
  const auto h = random_hermitian(9, Seed{30, 0});
  const Spectrum s = eigenvalues(h);
  CHECK(matrix_power_trace(h, 0) == 1.0);
  for (int order = 1; order <= 6; ++order) {
    double sum = 0.0;
    for (Index i = 0; i < s.size(); ++i) sum += std::pow(s.values(i), order);
    CHECK(matrix_power_trace(h, order) ==
          doctest::Approx(sum / static_cast<double>(s.size())).epsilon(1e-9));
  }
  CHECK_THROWS_AS(matrix_power_trace(h, -1), ConfigError);
}

TEST_CASE("matrix_power_trace order 2 equals the squared 2-norm") {
  const auto h = random_hermitian(8, Seed{31, 0});
  const double s2 = schatten_norm(h.matrix(), 2.0);
  CHECK(matrix_power_trace(h, 2) == doctest::Approx(s2 * s2).epsilon(1e-12));
}
