#pragma once

#include <utility>
#include <vector>

#include "mrdmd/numerics.hpp"

namespace mrdmd {

/// Real-valued state measurements at uniformly spaced times.
/// Column m holds the state at t0 + m*dt.
struct SnapshotMatrix {
    RealMatrix data;  // n_space x m_time
    double dt = 1.0;
    double t0 = 0.0;

    SnapshotMatrix() = default;
    SnapshotMatrix(RealMatrix d, double dt_, double t0_ = 0.0);

    Index n_space() const { return data.rows(); }
    Index m_time() const { return data.cols(); }
    double time_at(Index m) const { return t0 + static_cast<double>(m) * dt; }
    /// Time of the last snapshot.
    double t_end() const { return time_at(m_time() - 1); }
};

/// One DMD fit: spatial modes with their discrete eigenvalues, continuous
/// rates and initial amplitudes. Modes are unit 2-norm and ordered by
/// ascending |omega|.
struct DmdResult {
    Matrix modes;        // n_space x rank
    Vector lambdas;      // discrete-time eigenvalues
    Vector omegas;       // ln(lambda)/dt, principal branch
    Vector amplitudes;   // b = pinv(modes) * x1
    Index rank = 0;
    double dt = 1.0;
    double t0 = 0.0;
    Index window_len = 0;       // snapshot count of the fitted window
    Index dropped_zero_lambdas = 0;  // nilpotent directions removed

    /// Keep only the modes at the given indices (in the given order).
    DmdResult restrict_to(const std::vector<Index>& keep) const;
};

/// Columns 1..M-1 and 2..M of the window: the "before" and "after"
/// snapshot pairs.
std::pair<RealMatrix, RealMatrix> split_pairs(const SnapshotMatrix& x);

/// Exact DMD of a snapshot window.
///
/// SVD of the left pair matrix, reduced propagator U^* X2 V S^-1, its
/// eigendecomposition, and modes X2 V S^-1 W. Amplitudes are fitted
/// against the window's first snapshot, so the expansion uses local time
/// tau = t - t0.
DmdResult fit(const SnapshotMatrix& x, const RankPolicy& policy = RankPolicy::hard_threshold());

/// Least-squares coefficients b minimizing ||x1 - modes*b||_2.
Vector amplitudes(const Matrix& modes, const Vector& x1);

/// Evaluate the expansion sum_k b_k psi_k exp(omega_k (t - t0)) at each
/// requested time (one column per time). Times may extend beyond the
/// fitted window.
Matrix reconstruct(const DmdResult& r, const std::vector<double>& times);

/// Real part of reconstruct(); the natural view for real input data.
RealMatrix reconstruct_real(const DmdResult& r, const std::vector<double>& times);

/// Times of all snapshots in the window.
std::vector<double> snapshot_times(const SnapshotMatrix& x);

/// Split the window into (background, foreground): background is the
/// reconstruction using only modes with |omega| <= rho, foreground is
/// data - background. rho is in units of 1/time.
std::pair<RealMatrix, RealMatrix> background_foreground_split(const DmdResult& r,
                                                              const SnapshotMatrix& x,
                                                              double rho);

}  // namespace mrdmd
