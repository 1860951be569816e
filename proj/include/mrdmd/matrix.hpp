#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>

#include "mrdmd/errors.hpp"

namespace mrdmd {

// Dense column-major storage throughout. Real matrices are the
// imaginary-zero special case of Matrix.
using Matrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Complex = std::complex<double>;
using Index = Eigen::Index;

/// Throws InvalidInputError if any entry is NaN or infinite, or if the
/// matrix is empty.
template <typename Derived>
void require_finite(const Eigen::MatrixBase<Derived>& m, const std::string& name) {
    if (m.rows() < 1 || m.cols() < 1) {
        throw InvalidInputError(name + ": matrix must have at least one row and column");
    }
    if (!m.allFinite()) {
        throw InvalidInputError(name + ": non-finite entry");
    }
}

inline bool is_real(const Matrix& m, double tol = 0.0) {
    return (m.imag().cwiseAbs().maxCoeff() <= tol);
}

}  // namespace mrdmd
