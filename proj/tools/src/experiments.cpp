#include "polykernel_cli/experiments.hpp"

#include <polykernel/analysis.hpp>
#include <polykernel/detail/parallel.hpp>
#include <polykernel/errors.hpp>
#include <polykernel/solvers.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

namespace polykernel::cli {

Method parse_method(std::string_view name)
{
    if (name == "stable")
        return Method::stable;
    if (name == "direct")
        return Method::direct;
    throw InvalidArgument("unknown method '" + std::string(name) + "'");
}

std::string to_string(Method method)
{
    return method == Method::stable ? "stable" : "direct";
}

std::vector<ConvergenceRow> convergence_sweep(const ConvergenceConfig& config, const FunctionCatalog& catalog)
{
    if (config.n_min < 1 || config.n_max < config.n_min)
        throw InvalidArgument("need 1 <= n_min <= n_max");
    if (config.grid_size < 1)
        throw InvalidArgument("grid size must be positive");
    const TestFunction f = catalog.find(config.function);
    const Box domain = Box::unit(1);
    const PointSet grid = evaluation_grid(domain, config.grid_size);
    Eigen::VectorXd f_grid(static_cast<Eigen::Index>(grid.size()));
    for (std::size_t i = 0; i < grid.size(); ++i)
        f_grid(static_cast<Eigen::Index>(i)) = f(grid.point(i));

    std::vector<ConvergenceRow> rows;
    for (int n = config.n_min; n <= config.n_max; ++n)
        for (int off : config.p_offsets)
            for (double a : config.a_values)
                for (Method m : config.methods) {
                    ConvergenceRow row;
                    row.n = n;
                    row.p = n - 1 + off;
                    row.a = a;
                    row.method = m;
                    rows.push_back(row);
                }

    detail::parallel_for(rows.size(), config.threads, [&](std::size_t i) {
        ConvergenceRow& row = rows[i];
        try {
            const KernelParams params(row.a, row.p, 1);
            const PointSet X = generate_nodes(config.family, row.n, domain, config.seed + static_cast<std::uint64_t>(row.n));
            Eigen::MatrixXd y(row.n, 1);
            for (int k = 0; k < row.n; ++k)
                y(k, 0) = f(X.point(static_cast<std::size_t>(k)));
            Eigen::MatrixXd s;
            if (row.method == Method::stable) {
                const StableInterpolant model = build_stable(X, y, params);
                row.condition_estimate = model.condition_estimate;
                s = evaluate(model, grid);
            } else {
                const DirectInterpolant model = solve_direct(X, y, params);
                row.condition_estimate = model.condition_estimate;
                s = evaluate(model, grid);
            }
            double err = 0.0;
            for (Eigen::Index k = 0; k < s.rows(); ++k) {
                const double e = std::abs(s(k, 0) - f_grid(k));
                err = std::isnan(e) ? e : std::max(err, e);
                if (std::isnan(err))
                    break;
            }
            row.max_abs_error = err;
        } catch (const Error& e) {
            row.max_abs_error = std::numeric_limits<double>::quiet_NaN();
            row.condition_estimate = std::numeric_limits<double>::quiet_NaN();
            row.reason = e.what();
        }
    });

    std::stable_sort(rows.begin(), rows.end(), [](const ConvergenceRow& l, const ConvergenceRow& r) {
        return std::tie(l.n, l.p, l.a, l.method) < std::tie(r.n, r.p, r.a, r.method);
    });
    return rows;
}

} // namespace polykernel::cli
