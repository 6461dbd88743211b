#pragma once

#include "polykernel/index_set.hpp"
#include "polykernel/point_set.hpp"
#include "polykernel/unisolvency.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

namespace polykernel {

struct LebesgueReport {
    PointSet grid;
    /// lambda(x) = sum_i |l_i(x)| at each grid point
    Eigen::VectorXd lebesgue_values;
    /// max of lebesgue_values
    double constant = 0.0;
    std::size_t argmax = 0;
};

/// Lebesgue function of the kernel interpolant on a grid, from the stable Lagrange basis.
LebesgueReport lebesgue_function(const PointSet& X, const KernelParams& params, const PointSet& grid);

/// Lebesgue function of polynomial interpolation on X (d = 1), via barycentric weights.
/// A baseline for comparison with the kernel interpolant at p = N - 1.
Eigen::VectorXd polynomial_lebesgue_function(const PointSet& X, const PointSet& grid);

/// Evaluation grid: grid_size equispaced points for d = 1, otherwise a tensor grid
/// with ceil(grid_size^(1/d)) points per axis.
PointSet evaluation_grid(const Box& domain, int grid_size);

struct GrowthConfig {
    NodeFamily family = NodeFamily::chebyshev;
    int n_min = 5;
    int n_max = 45;
    int n_step = 1;
    /// p = N - 1 + offset
    std::vector<int> p_offsets{0, 2, 4, 6};
    std::vector<double> a_values{5.0, 10.0};
    int grid_size = 1000;
    Box domain = Box::unit(1);
    std::uint64_t seed = 0;
    int threads = 1;
};

struct GrowthRow {
    int n = 0;
    int p = 0;
    double a = 0.0;
    /// NaN when the cell failed
    double lebesgue_constant = 0.0;
    /// Empty on success, otherwise the failure message.
    std::string reason;
};

/// One Lebesgue constant per (N, p, a) cell, ordered by N, then p, then a.
/// Cells that fail are recorded with NaN and the error message.
std::vector<GrowthRow> lebesgue_growth(const GrowthConfig& config);

} // namespace polykernel
