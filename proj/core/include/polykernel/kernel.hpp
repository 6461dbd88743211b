#pragma once

#include "polykernel/index_set.hpp"
#include "polykernel/point_set.hpp"

#include <Eigen/Dense>

#include <span>

namespace polykernel {

/// (a + <x,y>)^p by direct powering.
double kernel_eval(std::span<const double> x, std::span<const double> y, const KernelParams& params);

/// Components sqrt(d_zeta) x^zeta in the order of idx.
Eigen::VectorXd feature_map(std::span<const double> x, const KernelParams& params, const IndexSet& idx);

/// x^zeta
double monomial(std::span<const double> x, const MultiIndex& zeta);

/// N x M matrix with entries x_i^zeta_j, columns in the order of idx.
Eigen::MatrixXd vandermonde(const PointSet& X, const IndexSet& idx);

/// Diagonal of D (the d_zeta) in the order of idx.
Eigen::VectorXd coefficient_diagonal(const IndexSet& idx);

/// Symmetric N x N kernel matrix.
Eigen::MatrixXd kernel_matrix(const PointSet& X, const KernelParams& params);

/// Rectangular matrix k(y_i, x_j) for y in Y, x in X.
Eigen::MatrixXd cross_kernel_matrix(const PointSet& Y, const PointSet& X, const KernelParams& params);

} // namespace polykernel
