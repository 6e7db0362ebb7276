#pragma once

#include <Eigen/Dense>
#include <complex>

namespace vibspec {

using Complex = std::complex<double>;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Number field the random matrices are drawn over.
enum class Field { Real, Complex };

/// Mass matrix M (positive definite) and stiffness matrix K (positive
/// semi-definite) of one small-oscillation system.
template <typename Scalar>
struct MatrixPair {
    DenseMatrix<Scalar> mass;
    DenseMatrix<Scalar> stiffness;

    Eigen::Index size() const { return mass.rows(); }
};

}  // namespace vibspec
