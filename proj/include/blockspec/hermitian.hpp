#pragma once

#include <cassert>
#include <utility>

#include "blockspec/errors.hpp"
#include "blockspec/types.hpp"

namespace blockspec {

// Relative tolerance used when accepting externally supplied matrices as
// Hermitian: the allowed asymmetry is kHermitianTolerance * (1 + max |a_ij|).
inline constexpr double kHermitianTolerance = 1e-12;

template <class Scalar>
bool is_exactly_hermitian(const Matrix<Scalar>& m) {
  if (m.rows() != m.cols()) return false;
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i <= j; ++i)
      if (m(i, j) != Eigen::numext::conj(m(j, i))) return false;
  return true;
}

// A square matrix that is Hermitian exactly, entry for entry, so that
// downstream identities (spectra of transposes, permutation conjugates,
// real linear combinations) hold to the last bit rather than to rounding.
template <class Scalar>
class Hermitian {
 public:
  using Mat = Matrix<Scalar>;

  Hermitian() = default;

  // (m + m^*)/2 with the diagonal forced real.  Averaging the two
  // triangles entry by entry keeps the result exactly Hermitian.
  static Hermitian symmetrized(const Mat& m) {
    check_square(m);
    Mat h(m.rows(), m.cols());
    for (Index j = 0; j < m.cols(); ++j) {
      for (Index i = 0; i < j; ++i) {
        const Scalar v = (m(i, j) + Eigen::numext::conj(m(j, i))) / Scalar(2);
        h(i, j) = v;
        h(j, i) = Eigen::numext::conj(v);
      }
      h(j, j) = Scalar(Eigen::numext::real(m(j, j)));
    }
    return Hermitian(std::move(h));
  }

  // Accepts m only if it is Hermitian up to rounding, i.e.
  // max |m - m^*| <= kHermitianTolerance * (1 + max |m_ij|),
  // then symmetrizes the residual away.
  static Hermitian enforce(const Mat& m) {
    check_square(m);
    const double scale = 1.0 + m.cwiseAbs().maxCoeff();
    const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (!(asym <= kHermitianTolerance * scale))
      throw ConfigError("matrix is not Hermitian: max asymmetry " +
                        std::to_string(asym) + " exceeds tolerance");
    return symmetrized(m);
  }

  // Takes ownership without touching the entries.  The caller guarantees
  // exact Hermitian symmetry; debug builds verify it.
  static Hermitian assume(Mat m) {
    check_square(m);
    assert(is_exactly_hermitian(m));
    return Hermitian(std::move(m));
  }

  Index dim() const { return mat_.rows(); }
  const Mat& matrix() const { return mat_; }

 private:
  explicit Hermitian(Mat m) : mat_(std::move(m)) {}

  static void check_square(const Mat& m) {
    if (m.rows() != m.cols() || m.rows() < 1)
      throw ConfigError("Hermitian requires a square matrix of positive size");
  }

  Mat mat_;
};

}  // namespace blockspec
