#pragma once

#include "polykernel/index_set.hpp"
#include "polykernel/point_set.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace polykernel {

struct UnisolvencyResult {
    bool decision = false;
    int rank = 0;
    double smallest_singular_value = 0.0;
    double largest_singular_value = 0.0;
    /// sigma_max * max(N, M) * u
    double threshold = 0.0;
};

/// Numerical row rank of the N x M Vandermonde matrix.
UnisolvencyResult is_unisolvent(const PointSet& X, const KernelParams& params);

/// Rank threshold used by is_unisolvent for a matrix of the given shape.
double rank_threshold(double sigma_max, std::size_t rows, std::size_t cols);

/// Candidate budget used when none is given: 512 d.
int default_candidate_budget(int d);

/// Greedily extends X to M_a points with an invertible square Vandermonde.
/// Candidates are a Halton sample of the bounding box of X inflated by half its
/// width on each side; each step keeps the candidate maximizing sigma_min.
PointSet complete_to_unisolvent(const PointSet& X, const KernelParams& params, int candidate_budget = 0);

/// First n points of the Halton sequence in [0,1)^d (bases: first d primes, index from 1).
PointMatrix halton(std::size_t n, int d);

enum class NodeFamily {
    chebyshev,
    chebyshev_lobatto,
    equispaced,
    tensor_grid,
    uniform_random,
};

NodeFamily parse_node_family(std::string_view name);
std::string to_string(NodeFamily family);

/// Axis-aligned box [lo_k, hi_k].
struct Box {
    std::vector<double> lo;
    std::vector<double> hi;

    int dim() const { return static_cast<int>(lo.size()); }
    static Box unit(int d) { return {std::vector<double>(d, -1.0), std::vector<double>(d, 1.0)}; }
};

/// Node families on a box:
///  chebyshev         cos((2i-1) pi / (2n)), i = 1..n (d = 1)
///  chebyshev_lobatto cos(i pi / (n-1)), i = 0..n-1 (d = 1)
///  equispaced        n points including the endpoints (d = 1)
///  tensor_grid       n equispaced points per axis, n^d points in total
///  uniform_random    n uniform points drawn with the given seed
/// 1-D families are returned in increasing order.
PointSet generate_nodes(NodeFamily family, int n, const Box& domain, std::uint64_t seed = 0);

/// n equispaced points on [lo, hi] including the endpoints.
PointSet equispaced_grid(int n, double lo = -1.0, double hi = 1.0);

} // namespace polykernel
