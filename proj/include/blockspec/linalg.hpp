#pragma once

#include <cmath>
#include <vector>

#include "blockspec/errors.hpp"
#include "blockspec/hermitian.hpp"
#include "blockspec/types.hpp"

namespace blockspec {

// Eigenvalues of a Hermitian matrix, sorted ascending.
struct Spectrum {
  RealVector values;

  Index size() const { return values.size(); }
  double min() const { return values(0); }
  double max() const { return values(values.size() - 1); }
};

template <class Scalar>
Matrix<Scalar> kronecker(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  Matrix<Scalar> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Row r of the commutation matrix K_{p,q} has its single 1 in column
// perm[r]; K_{p,q} vec(A) = vec(A^T) for A of size p x q.
inline std::vector<Index> commutation_permutation(Index p, Index q) {
  if (p < 1 || q < 1)
    throw ConfigError("commutation_permutation requires positive dimensions");
  std::vector<Index> perm(static_cast<std::size_t>(p * q));
  for (Index i = 0; i < p; ++i)
    for (Index j = 0; j < q; ++j)
      perm[static_cast<std::size_t>(i * q + j)] = j * p + i;
  return perm;
}

inline RealMatrix commutation_matrix(Index p, Index q) {
  const auto perm = commutation_permutation(p, q);
  RealMatrix m = RealMatrix::Zero(p * q, p * q);
  for (Index r = 0; r < p * q; ++r) m(r, perm[static_cast<std::size_t>(r)]) = 1.0;
  return m;
}

// Conjugates m by the commutation matrices so that a Kronecker product
// a (x) b of p x p and q x q factors maps to b (x) a.  Row and column
// permutations only, hence exact.
template <class Scalar>
Matrix<Scalar> commutation_conjugate(const Matrix<Scalar>& m, Index p, Index q) {
  if (m.rows() != p * q || m.cols() != p * q)
    throw ConfigError("commutation_conjugate: dimensions do not match p*q");
  const auto perm = commutation_permutation(p, q);
  Matrix<Scalar> out(m.rows(), m.cols());
  // out = K_{p,q} m K_{p,q}^T, i.e. out(r, c) = m(perm[r], perm[c]).
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c)
      out(r, c) = m(perm[static_cast<std::size_t>(r)], perm[static_cast<std::size_t>(c)]);
  return out;
}

// max_ij |K_{q,p} (a (x) b) K_{p,q} - b (x) a| with p = rows(a), q = rows(b).
template <class Scalar>
double commute_kron_residual(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols())
    throw ConfigError("commute_kron_residual expects square factors");
  const Matrix<Scalar> lhs = commutation_conjugate(kronecker(a, b), b.rows(), a.rows());
  return (lhs - kronecker(b, a)).cwiseAbs().maxCoeff();
}

template <class Scalar>
Spectrum eigenvalues(const Hermitian<Scalar>& a) {
  Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> solver(a.matrix(),
                                                       Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw ContractError("self-adjoint eigensolver failed to converge");
  return Spectrum{solver.eigenvalues()};
}

// Schatten p-norm with the normalized trace: (n^{-1} sum_i s_i^p)^{1/p},
// where s_i are the singular values.  With this convention the operator
// norm dominates every p and the identity matrix has norm 1 for all p.
template <class Scalar>
double schatten_norm(const Matrix<Scalar>& a, double p) {
  if (a.rows() != a.cols() || a.rows() < 1)
    throw ConfigError("schatten_norm expects a square matrix");
  if (!(p >= 1.0)) throw ConfigError("schatten_norm requires p >= 1");
  Eigen::JacobiSVD<Matrix<Scalar>> svd(a);
  const auto& s = svd.singularValues();
  double acc = 0.0;
  for (Index i = 0; i < s.size(); ++i) acc += std::pow(s(i), p);
  return std::pow(acc / static_cast<double>(a.rows()), 1.0 / p);
}

template <class Scalar>
double operator_norm(const Hermitian<Scalar>& a) {
  const Spectrum s = eigenvalues(a);
  return std::max(std::abs(s.min()), std::abs(s.max()));
}

// Largest singular value; agrees with the Hermitian overload on Hermitian
// input and caps the normalized Schatten norms for every p.
template <class Scalar>
double operator_norm(const Matrix<Scalar>& a) {
  if (a.rows() != a.cols() || a.rows() < 1)
    throw ConfigError("operator_norm expects a square matrix");
  Eigen::JacobiSVD<Matrix<Scalar>> svd(a);
  return svd.singularValues()(0);
}

template <class Scalar>
double normalized_trace(const Matrix<Scalar>& a) {
  if (a.rows() != a.cols() || a.rows() < 1)
    throw ConfigError("normalized_trace expects a square matrix");
  return Eigen::numext::real(a.trace()) / static_cast<double>(a.rows());
}

// tr_n(A^s) = n^{-1} trace of the s-th power; order 0 gives 1.
template <class Scalar>
double matrix_power_trace(const Hermitian<Scalar>& a, int order) {
  if (order < 0) throw ConfigError("matrix_power_trace requires order >= 0");
  if (order == 0) return 1.0;
  Matrix<Scalar> p = a.matrix();
  for (int t = 1; t < order; ++t) p = (p * a.matrix()).eval();
  return normalized_trace(p);
}

}  // namespace blockspec
