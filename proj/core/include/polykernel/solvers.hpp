#pragma once

#include "polykernel/index_set.hpp"
#include "polykernel/point_set.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

namespace polykernel {

/// Interpolant s(x) = sum_i c_i k(x, x_i) from the kernel system A c = y.
struct DirectInterpolant {
    KernelParams params;
    PointSet X;
    /// N x d' coefficients
    Eigen::MatrixXd coefficients;
    /// 1-norm condition estimate of A
    double condition_estimate = 0.0;
};

/// Solves A c = y with a diagonally pivoted LDL^T factorization.
/// Throws SingularSystem on a zero or non-finite pivot or repeated points.
DirectInterpolant solve_direct(const PointSet& X, const Eigen::MatrixXd& y, const KernelParams& params);

/// Intermediate quantities of the stable construction, V P = Q [R1 | R2].
struct StableFactorization {
    /// Column order used by the factorization: the N selected indices first.
    IndexSet ordering;
    /// ordering[k] is the canonical index perm[k]
    std::vector<std::size_t> perm;
    /// Number of leading positions where the selection differs from canonical order.
    std::size_t skipped = 0;
    Eigen::MatrixXd Q;
    Eigen::MatrixXd R1;
    Eigen::MatrixXd R2;
    Eigen::VectorXd D1;
    Eigen::VectorXd D2;
};

/// A column whose residual after elimination is at most this many unit roundoffs
/// times its own norm counts as dependent on the columns chosen before it.
inline constexpr double kColumnDependenceTolerance = 8.0;

/// Factorizes V for the stable basis. Columns are taken in canonical order; a
/// column that is numerically dependent on those already taken (a node at the
/// origin with only even monomials available, say) is deferred to the R2 block.
/// Throws NotUnisolvent when no independent column remains, or if X has
/// repeated points.
StableFactorization stable_factorization(const PointSet& X, const KernelParams& params);

/// C_u' = [I; D2 R2^T R1^{-T} D1^{-1}], M x N, rows in f.ordering.
Eigen::MatrixXd basis_change(const StableFactorization& f);

/// Interpolant in the basis u(x) = V(x) C_u'.
struct StableInterpolant {
    KernelParams params;
    PointSet X;
    IndexSet ordering;
    /// M x N, top N x N block is the identity
    Eigen::MatrixXd C_u_prime;
    /// N x d'
    Eigen::MatrixXd c_u;
    /// 1-norm condition estimate of V_u(X) = V(X) C_u'
    double condition_estimate = 0.0;
};

/// Builds the stable interpolant: c_u solves V_u(X) c_u = y by partial-pivot LU.
StableInterpolant build_stable(const PointSet& X, const Eigen::MatrixXd& y, const KernelParams& params);

/// Evaluation on X_eval, N_eval x d'.
Eigen::MatrixXd evaluate(const StableInterpolant& model, const PointSet& X_eval);
Eigen::MatrixXd evaluate(const DirectInterpolant& model, const PointSet& X_eval);

/// Matrix (l_j(x_i)) of Lagrange functions for X evaluated at X_eval, via the stable path.
Eigen::MatrixXd lagrange_basis(const PointSet& X, const KernelParams& params, const PointSet& X_eval);

/// Lagrange functions via the direct method (for comparison only).
Eigen::MatrixXd lagrange_basis_direct(const PointSet& X, const KernelParams& params, const PointSet& X_eval);

} // namespace polykernel
