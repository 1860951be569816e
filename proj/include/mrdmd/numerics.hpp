#pragma once

#include <optional>

#include "mrdmd/matrix.hpp"

namespace mrdmd {

/// How many singular values/modes to keep after the SVD step.
struct RankPolicy {
    enum class Kind { Full, Fixed, HardThreshold };

    Kind kind = Kind::HardThreshold;
    Index fixed_rank = 0;  // only meaningful for Kind::Fixed

    static RankPolicy full() { return {Kind::Full, 0}; }
    static RankPolicy fixed(Index k) { return {Kind::Fixed, k}; }
    static RankPolicy hard_threshold() { return {Kind::HardThreshold, 0}; }
};

/// Thin SVD truncated to K columns: a ≈ u * diag(singular_values) * v^H.
struct SvdResult {
    Matrix u;                      // rows x K, orthonormal columns
    RealVector singular_values;    // length K, descending, >= 0
    Matrix v;                      // cols x K, orthonormal columns

    Index rank() const { return singular_values.size(); }
};

/// Eigenpairs of a square matrix, ordered by descending |lambda|
/// (ties broken by descending imaginary part).
struct EigResult {
    Vector eigenvalues;
    Matrix eigenvectors;  // columns paired with eigenvalues, unit 2-norm
};

/// Thin SVD with rank selection per policy.
///
/// Full keeps every numerically computed singular value; fixed(k) keeps the
/// leading k; hard_threshold applies the optimal singular-value threshold
/// for data with unknown noise (see optimal_rank).
SvdResult svd(const Matrix& a, const RankPolicy& policy = RankPolicy::full());

/// Rank chosen by the Gavish-Donoho hard threshold for unknown noise:
/// counts singular values above omega(beta) * median(sigma), where
/// beta = min(rows,cols)/max(rows,cols) and
/// omega(beta) ~= 0.56 b^3 - 0.95 b^2 + 1.82 b + 1.43.
/// Values at or below max(rows,cols)*eps relative to sigma_1 never count.
/// Returns at least 1.
Index optimal_rank(const RealVector& singular_values, Index rows, Index cols);

/// Eigendecomposition of a small square matrix in complex arithmetic.
EigResult eig(const Matrix& a);

/// Moore-Penrose pseudo-inverse via SVD. Singular values below
/// max(rows,cols) * eps * sigma_1 are treated as zero.
Matrix pinv(const Matrix& a);

}  // namespace mrdmd
