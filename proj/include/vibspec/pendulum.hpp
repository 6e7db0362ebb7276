#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "vibspec/types.hpp"

namespace vibspec {

/// Charged multi-segment pendulum hanging from a wall charge.
///
/// Segment k (k = 1..N) has length lengths[k-1]; the point mass at its lower
/// hinge is masses[k-1] and carries charge charges[k]. charges[0] is the
/// charge fixed at the suspension point. All charges are like-sign, so the
/// Coulomb interaction is purely repulsive.
struct PendulumConfig {
    Eigen::ArrayXd lengths;  ///< N segment lengths, > 0
    Eigen::ArrayXd masses;   ///< N point masses, > 0
    Eigen::ArrayXd charges;  ///< N+1 charges (wall first), >= 0
    double gravity = 0.0;

    int n() const { return static_cast<int>(lengths.size()); }

    /// Throws ConfigError when sizes or signs are inconsistent, or when
    /// neither gravity nor any charge pair provides a restoring force.
    void validate() const;
};

/// Uniform pendulum with total length and mass split evenly over n segments.
/// Charges scale as charge_scale / (n sqrt(log n)), which balances the
/// Coulomb energy against gravity as n grows; natural logarithm.
PendulumConfig uniform_config(int n, double total_length, double total_mass,
                              double charge_scale, double gravity);

/// Draws lengths, masses and charges i.i.d. uniformly around the base values
/// such that each keeps its base mean and acquires relative standard
/// deviation relative_spread. Gravity is left untouched. Deterministic in
/// seed. Spreads >= 1/sqrt(3) would allow non-positive draws and are
/// rejected.
PendulumConfig disordered_config(const PendulumConfig& base,
                                 double relative_spread, std::uint64_t seed);

/// Small-oscillation mass and stiffness matrices about the straight-down
/// equilibrium. Runs in O(N^2) time and memory using prefix sums over the
/// segment lengths, masses, and the pairwise charge kernel.
MatrixPair<double> assemble(const PendulumConfig& config);

/// Coulomb block U of the stiffness matrix. Every row sums to zero (rigid
/// rotations about the pivot cost no Coulomb energy) and U is diagonally
/// dominant with non-negative diagonal, hence positive semi-definite.
Eigen::MatrixXd coulomb_matrix(const PendulumConfig& config);

}  // namespace vibspec
