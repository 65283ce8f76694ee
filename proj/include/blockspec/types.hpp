#pragma once

#include <complex>

#include <Eigen/Dense>

namespace blockspec {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Index = Eigen::Index;
using RealMatrix = Matrix<double>;
using RealVector = Vector<double>;
using Complex = std::complex<double>;
using ComplexMatrix = Matrix<Complex>;

}  // namespace blockspec
