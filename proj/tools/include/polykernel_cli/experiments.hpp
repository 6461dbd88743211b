#pragma once

#include "polykernel_cli/test_functions.hpp"

#include <polykernel/unisolvency.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace polykernel::cli {

enum class Method { stable, direct };

Method parse_method(std::string_view name);
std::string to_string(Method method);

struct ConvergenceConfig {
    NodeFamily family = NodeFamily::chebyshev;
    int n_min = 5;
    int n_max = 50;
    std::vector<int> p_offsets{0, 2, 4, 6};
    std::vector<double> a_values{5.0, 10.0};
    std::vector<Method> methods{Method::stable, Method::direct};
    std::string function = "cos10x";
    int grid_size = 1000;
    std::uint64_t seed = 0;
    int threads = 1;
};

struct ConvergenceRow {
    int n = 0;
    int p = 0;
    double a = 0.0;
    Method method = Method::stable;
    /// max |f - s| on the grid, NaN if the cell failed
    double max_abs_error = 0.0;
    double condition_estimate = 0.0;
    std::string reason;
};

/// Interpolates the named function on N nodes of [-1, 1] for every (N, p, a, method)
/// and measures the error on grid_size equispaced points. Rows are sorted by N, p,
/// a, then method. Random node sets use seed + N.
std::vector<ConvergenceRow> convergence_sweep(const ConvergenceConfig& config,
                                              const FunctionCatalog& catalog = FunctionCatalog::builtin());

} // namespace polykernel::cli
