#include "polykernel/analysis.hpp"

#include "polykernel/detail/parallel.hpp"
#include "polykernel/errors.hpp"
#include "polykernel/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace polykernel {

LebesgueReport lebesgue_function(const PointSet& X, const KernelParams& params, const PointSet& grid)
{
    LebesgueReport r;
    r.grid = grid;
    const Eigen::MatrixXd L = lagrange_basis(X, params, grid);
    r.lebesgue_values = L.cwiseAbs().rowwise().sum();
    if (r.lebesgue_values.size() > 0) {
        Eigen::Index k = 0;
        r.constant = r.lebesgue_values.maxCoeff(&k);
        r.argmax = static_cast<std::size_t>(k);
    }
    return r;
}

Eigen::VectorXd polynomial_lebesgue_function(const PointSet& X, const PointSet& grid)
{
    if (X.dim() != 1 || (!grid.empty() && grid.dim() != 1))
        throw InvalidArgument("polynomial Lebesgue baseline is one-dimensional");
    if (!X.pairwise_distinct())
        throw NotUnisolvent("repeated nodes");
    const Eigen::Index n = static_cast<Eigen::Index>(X.size());
    const auto x = X.coords().col(0);

    // Barycentric weights, rescaled each step to stay in range.
    Eigen::VectorXd w = Eigen::VectorXd::Ones(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index k = 0; k < n; ++k)
            if (k != j)
                w(j) /= (x(j) - x(k));
    }
    w /= w.cwiseAbs().maxCoeff();

    Eigen::VectorXd lam(static_cast<Eigen::Index>(grid.size()));
    for (Eigen::Index i = 0; i < lam.size(); ++i) {
        const double t = grid.coords()(i, 0);
        double num = 0.0, den = 0.0;
        bool at_node = false;
        for (Eigen::Index j = 0; j < n; ++j) {
            if (t == x(j)) {
                at_node = true;
                break;
            }
            const double q = w(j) / (t - x(j));
            num += std::abs(q);
            den += q;
        }
        lam(i) = at_node ? 1.0 : num / std::abs(den);
    }
    return lam;
}

PointSet evaluation_grid(const Box& domain, int grid_size)
{
    if (grid_size < 1)
        throw InvalidArgument("grid size must be at least 1");
    if (domain.dim() == 1)
        return generate_nodes(NodeFamily::equispaced, grid_size, domain);
    const int per_axis = static_cast<int>(std::ceil(std::pow(grid_size, 1.0 / domain.dim()) - 1e-9));
    return generate_nodes(NodeFamily::tensor_grid, per_axis, domain);
}

std::vector<GrowthRow> lebesgue_growth(const GrowthConfig& config)
{
    if (config.n_min < 1 || config.n_max < config.n_min || config.n_step < 1)
        throw InvalidArgument("invalid N range");
    const PointSet grid = evaluation_grid(config.domain, config.grid_size);

    std::vector<GrowthRow> rows;
    for (int n = config.n_min; n <= config.n_max; n += config.n_step)
        for (int off : config.p_offsets)
            for (double a : config.a_values) {
                GrowthRow r;
                r.n = n;
                r.p = n - 1 + off;
                r.a = a;
                rows.push_back(r);
            }
    std::stable_sort(rows.begin(), rows.end(), [](const GrowthRow& l, const GrowthRow& r) {
        if (l.n != r.n)
            return l.n < r.n;
        if (l.p != r.p)
            return l.p < r.p;
        return l.a < r.a;
    });

    detail::parallel_for(rows.size(), config.threads, [&](std::size_t i) {
        GrowthRow& r = rows[i];
        try {
            const KernelParams params(r.a, r.p, config.domain.dim());
            const PointSet X = generate_nodes(config.family, r.n, config.domain,
                                              config.seed + static_cast<std::uint64_t>(r.n));
            r.lebesgue_constant = lebesgue_function(X, params, grid).constant;
        } catch (const Error& e) {
            r.lebesgue_constant = std::numeric_limits<double>::quiet_NaN();
            r.reason = e.what();
        }
    });
    return rows;
}

} // namespace polykernel
