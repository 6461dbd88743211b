#include "polykernel_cli/cli.hpp"

#include "polykernel_cli/csv_io.hpp"
#include "polykernel_cli/experiments.hpp"

#include <polykernel/polykernel.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace polykernel::cli {

namespace {

struct OutputOptions {
    std::string path;
    std::string format = "csv";
    bool header = true;
};

void add_output_options(CLI::App* sub, OutputOptions& o)
{
    sub->add_option("--out", o.path, "Output file (default: stdout)");
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_flag("--header,!--no-header", o.header, "Write '#' header lines with version and settings (csv)")
        ->capture_default_str();
}

void emit(const Report& report, const OutputOptions& o, std::ostream& out)
{
    std::ostringstream buf;
    if (o.format == "json")
        write_json(report, buf);
    else
        write_csv(report, buf, o.header);
    if (o.path.empty()) {
        out << buf.str();
        return;
    }
    std::ofstream file(o.path, std::ios::binary | std::ios::trunc);
    if (!file)
        throw IoError("cannot open '" + o.path + "' for writing");
    file << buf.str();
    file.flush();
    if (!file)
        throw IoError("error while writing '" + o.path + "'");
}

template <class T>
std::string join(const std::vector<T>& items)
{
    std::string s;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i)
            s += ',';
        if constexpr (std::is_floating_point_v<T>)
            s += format_double(items[i]);
        else
            s += std::to_string(items[i]);
    }
    return s;
}

std::vector<Method> parse_methods(const std::string& name)
{
    if (name == "both")
        return {Method::stable, Method::direct};
    return {parse_method(name)};
}

std::vector<std::string> coordinate_names(int d)
{
    if (d == 1)
        return {"x"};
    std::vector<std::string> names;
    for (int k = 1; k <= d; ++k)
        names.push_back("x" + std::to_string(k));
    return names;
}

void append_coordinates(std::vector<Cell>& row, const PointSet& X, std::size_t i)
{
    for (double v : X.point(i))
        row.emplace_back(v);
}

Report make_report(const std::string& command)
{
    Report r;
    r.command = command;
    return r;
}

// ---------------------------------------------------------------- interpolate

struct InterpolateOptions {
    std::string points;
    std::string values;
    std::string eval;
    double a = 1.0;
    int p = 0;
    std::string method = "stable";
    OutputOptions output;
};

Report run_interpolate(const InterpolateOptions& o)
{
    const PointSet X = read_points(o.points);
    const Eigen::MatrixXd y = read_values(o.values);
    const PointSet X_eval = read_points(o.eval, X.dim());
    if (static_cast<std::size_t>(y.rows()) != X.size())
        throw InvalidArgument("'" + o.values + "' has " + std::to_string(y.rows()) + " rows but '" + o.points
                              + "' has " + std::to_string(X.size()) + " points");
    if (X_eval.dim() != X.dim())
        throw InvalidArgument("evaluation points have dimension " + std::to_string(X_eval.dim()) + ", expected "
                              + std::to_string(X.dim()));
    const KernelParams params(o.a, o.p, X.dim());
    const std::vector<Method> methods = parse_methods(o.method);

    Report r = make_report("interpolate");
    r.config = {{"points", o.points}, {"values", o.values}, {"eval", o.eval}, {"a", format_double(o.a)},
                {"p", std::to_string(o.p)}, {"method", o.method}};
    r.columns = coordinate_names(X.dim());

    std::vector<Eigen::MatrixXd> results;
    for (Method m : methods) {
        double cond = 0.0;
        if (m == Method::stable) {
            const StableInterpolant model = build_stable(X, y, params);
            cond = model.condition_estimate;
            results.push_back(evaluate(model, X_eval));
        } else {
            const DirectInterpolant model = solve_direct(X, y, params);
            cond = model.condition_estimate;
            results.push_back(evaluate(model, X_eval));
        }
        r.summary.emplace_back("condition_estimate." + to_string(m), format_double(cond));
        for (Eigen::Index k = 0; k < y.cols(); ++k)
            r.columns.push_back(y.cols() == 1 ? to_string(m) : to_string(m) + "_" + std::to_string(k + 1));
    }

    for (std::size_t i = 0; i < X_eval.size(); ++i) {
        std::vector<Cell> row;
        append_coordinates(row, X_eval, i);
        for (const auto& s : results)
            for (Eigen::Index k = 0; k < s.cols(); ++k)
                row.emplace_back(s(static_cast<Eigen::Index>(i), k));
        r.rows.push_back(std::move(row));
    }
    return r;
}

// ---------------------------------------------------------------- convergence

struct ConvergenceOptions {
    std::string nodes = "chebyshev";
    int n_min = 5;
    int n_max = 50;
    std::vector<int> p_offsets{0, 2, 4, 6};
    std::vector<double> a_values{5.0, 10.0};
    std::string method = "both";
    std::string function = "cos10x";
    int grid = 1000;
    std::uint64_t seed = 0;
    int threads = 1;
    OutputOptions output;
};

Report run_convergence(const ConvergenceOptions& o)
{
    ConvergenceConfig config;
    config.family = parse_node_family(o.nodes);
    config.n_min = o.n_min;
    config.n_max = o.n_max;
    config.p_offsets = o.p_offsets;
    config.a_values = o.a_values;
    config.methods = parse_methods(o.method);
    config.function = o.function;
    config.grid_size = o.grid;
    config.seed = o.seed;
    config.threads = o.threads;

    Report r = make_report("convergence");
    r.config = {{"nodes", to_string(config.family)}, {"n_min", std::to_string(o.n_min)},
                {"n_max", std::to_string(o.n_max)},  {"p_offsets", join(o.p_offsets)},
                {"a", join(o.a_values)},             {"method", o.method},
                {"function", o.function},            {"grid", std::to_string(o.grid)},
                {"seed", std::to_string(o.seed)}};
    r.columns = {"N", "p", "a", "method", "max_abs_error", "condition_estimate", "reason"};
    for (const ConvergenceRow& row : convergence_sweep(config))
        r.rows.push_back({static_cast<long long>(row.n), static_cast<long long>(row.p), row.a, to_string(row.method),
                          row.max_abs_error, row.condition_estimate, row.reason});
    return r;
}

// ---------------------------------------------------------------- lebesgue

struct LebesgueOptions {
    std::string nodes = "chebyshev";
    int n_min = 5;
    int n_max = 45;
    int n_step = 1;
    std::vector<int> p_offsets{0, 2, 4, 6};
    std::vector<double> a_values{5.0, 10.0};
    int grid = 1000;
    std::uint64_t seed = 0;
    int threads = 1;
    OutputOptions output;
};

Report run_lebesgue(const LebesgueOptions& o)
{
    GrowthConfig config;
    config.family = parse_node_family(o.nodes);
    config.n_min = o.n_min;
    config.n_max = o.n_max;
    config.n_step = o.n_step;
    config.p_offsets = o.p_offsets;
    config.a_values = o.a_values;
    config.grid_size = o.grid;
    config.seed = o.seed;
    config.threads = o.threads;

    Report r = make_report("lebesgue");
    r.config = {{"nodes", to_string(config.family)}, {"n_min", std::to_string(o.n_min)},
                {"n_max", std::to_string(o.n_max)},  {"n_step", std::to_string(o.n_step)},
                {"p_offsets", join(o.p_offsets)},    {"a", join(o.a_values)},
                {"grid", std::to_string(o.grid)},    {"seed", std::to_string(o.seed)}};
    r.columns = {"N", "p", "a", "lebesgue_constant", "polynomial_lebesgue_constant", "reason"};

    const std::vector<GrowthRow> rows = lebesgue_growth(config);
    const PointSet grid = evaluation_grid(config.domain, config.grid_size);
    int cached_n = -1;
    double poly = 0.0;
    for (const GrowthRow& row : rows) {
        if (row.n != cached_n) {
            cached_n = row.n;
            const PointSet X = generate_nodes(config.family, row.n, config.domain,
                                              config.seed + static_cast<std::uint64_t>(row.n));
            poly = polynomial_lebesgue_function(X, grid).maxCoeff();
        }
        r.rows.push_back({static_cast<long long>(row.n), static_cast<long long>(row.p), row.a, row.lebesgue_constant,
                          poly, row.reason});
    }
    return r;
}

// ---------------------------------------------------------------- lagrange

struct LagrangeOptions {
    std::string points;
    std::string nodes = "chebyshev";
    int n = 15;
    double a = 10.0;
    int p = 25;
    std::string method = "both";
    int grid = 1000;
    std::uint64_t seed = 0;
    OutputOptions output;
};

Report run_lagrange(const LagrangeOptions& o)
{
    const PointSet X = o.points.empty() ? generate_nodes(parse_node_family(o.nodes), o.n, Box::unit(1), o.seed)
                                        : read_points(o.points);
    const KernelParams params(o.a, o.p, X.dim());
    const PointSet grid = evaluation_grid(Box::unit(X.dim()), o.grid);
    const std::vector<Method> methods = parse_methods(o.method);

    Report r = make_report("lagrange");
    if (o.points.empty())
        r.config = {{"nodes", o.nodes}, {"n", std::to_string(o.n)}, {"seed", std::to_string(o.seed)}};
    else
        r.config = {{"points", o.points}};
    r.config.insert(r.config.end(), {{"a", format_double(o.a)}, {"p", std::to_string(o.p)}, {"method", o.method},
                                     {"grid", std::to_string(o.grid)}});
    r.columns = coordinate_names(X.dim());

    std::vector<Eigen::MatrixXd> values;
    for (Method m : methods) {
        auto basis = m == Method::stable ? &lagrange_basis : &lagrange_basis_direct;
        const Eigen::MatrixXd at_nodes = basis(X, params, X);
        const double node_error = (at_nodes - Eigen::MatrixXd::Identity(at_nodes.rows(), at_nodes.cols()))
                                      .cwiseAbs()
                                      .maxCoeff();
        r.summary.emplace_back("node_error." + to_string(m), format_double(node_error));
        values.push_back(basis(X, params, grid));
        for (std::size_t j = 1; j <= X.size(); ++j)
            r.columns.push_back(to_string(m) + "_l" + std::to_string(j));
    }

    for (std::size_t i = 0; i < grid.size(); ++i) {
        std::vector<Cell> row;
        append_coordinates(row, grid, i);
        for (const auto& L : values)
            for (Eigen::Index j = 0; j < L.cols(); ++j)
                row.emplace_back(L(static_cast<Eigen::Index>(i), j));
        r.rows.push_back(std::move(row));
    }
    return r;
}

// ---------------------------------------------------------------- check-unisolvent

struct UnisolventOptions {
    std::string points;
    double a = 1.0;
    int p = 0;
    OutputOptions output;
};

Report run_check_unisolvent(const UnisolventOptions& o)
{
    const PointSet X = read_points(o.points);
    const KernelParams params(o.a, o.p, X.dim());
    const UnisolvencyResult res = is_unisolvent(X, params);

    Report r = make_report("check-unisolvent");
    r.config = {{"points", o.points}, {"a", format_double(o.a)}, {"p", std::to_string(o.p)}};
    r.columns = {"unisolvent", "rank", "points", "space_dimension", "sigma_min", "sigma_max", "threshold"};
    r.rows.push_back({std::string(res.decision ? "true" : "false"), static_cast<long long>(res.rank),
                      static_cast<long long>(X.size()), static_cast<long long>(index_set_size(params)),
                      res.smallest_singular_value, res.largest_singular_value, res.threshold});
    return r;
}

// ---------------------------------------------------------------- complete-points

struct CompleteOptions {
    std::string points;
    double a = 1.0;
    int p = 0;
    int budget = 0;
    OutputOptions output;
};

Report run_complete_points(const CompleteOptions& o)
{
    const PointSet X = read_points(o.points);
    const KernelParams params(o.a, o.p, X.dim());
    const PointSet Y = complete_to_unisolvent(X, params, o.budget);
    const UnisolvencyResult res = is_unisolvent(Y, params);

    Report r = make_report("complete-points");
    r.config = {{"points", o.points}, {"a", format_double(o.a)}, {"p", std::to_string(o.p)},
                {"budget", std::to_string(o.budget > 0 ? o.budget : default_candidate_budget(X.dim()))}};
    r.summary = {{"added", std::to_string(Y.size() - X.size())},
                 {"sigma_min", format_double(res.smallest_singular_value)},
                 {"threshold", format_double(res.threshold)}};
    r.columns = coordinate_names(Y.dim());
    for (std::size_t i = 0; i < Y.size(); ++i) {
        std::vector<Cell> row;
        append_coordinates(row, Y, i);
        r.rows.push_back(std::move(row));
    }
    return r;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Polynomial kernel interpolation toolkit", "polykernel"};
    app.set_version_flag("--version", std::string(kVersion));
    app.set_config("--config", "", "Read options from a TOML or INI file");
    app.require_subcommand(1);

    std::function<Report()> action;
    const OutputOptions* output = nullptr;

    InterpolateOptions interp;
    auto* cmd = app.add_subcommand("interpolate", "Fit an interpolant and evaluate it");
    cmd->add_option("--points", interp.points, "CSV of interpolation points")->required();
    cmd->add_option("--values", interp.values, "CSV of data values, one row per point")->required();
    cmd->add_option("--eval", interp.eval, "CSV of evaluation points")->required();
    cmd->add_option("--a", interp.a, "Kernel shift a")->capture_default_str();
    cmd->add_option("--p", interp.p, "Kernel degree p")->required();
    cmd->add_option("--method", interp.method, "Solver")
        ->check(CLI::IsMember({"direct", "stable", "both"}))
        ->capture_default_str();
    add_output_options(cmd, interp.output);
    cmd->callback([&] {
        action = [&] { return run_interpolate(interp); };
        output = &interp.output;
    });

    ConvergenceOptions conv;
    cmd = app.add_subcommand("convergence", "Error sweep over N, p and a for a test function");
    cmd->add_option("--nodes", conv.nodes, "Node family")->capture_default_str();
    cmd->add_option("--n-min", conv.n_min)->capture_default_str();
    cmd->add_option("--n-max", conv.n_max)->capture_default_str();
    cmd->add_option("--p-offsets", conv.p_offsets, "p = N - 1 + offset")->delimiter(',')->capture_default_str();
    cmd->add_option("--a", conv.a_values, "Kernel shifts")->delimiter(',')->capture_default_str();
    cmd->add_option("--method", conv.method)->check(CLI::IsMember({"direct", "stable", "both"}))->capture_default_str();
    cmd->add_option("--function", conv.function, "cos10x, runge, absx or monomial:k")->capture_default_str();
    cmd->add_option("--grid", conv.grid, "Number of equispaced error points")->capture_default_str();
    cmd->add_option("--seed", conv.seed)->capture_default_str();
    cmd->add_option("--threads", conv.threads)->capture_default_str();
    add_output_options(cmd, conv.output);
    cmd->callback([&] {
        action = [&] { return run_convergence(conv); };
        output = &conv.output;
    });

    LebesgueOptions leb;
    cmd = app.add_subcommand("lebesgue", "Lebesgue constants over N, p and a");
    cmd->add_option("--nodes", leb.nodes, "Node family")->capture_default_str();
    cmd->add_option("--n-min", leb.n_min)->capture_default_str();
    cmd->add_option("--n-max", leb.n_max)->capture_default_str();
    cmd->add_option("--n-step", leb.n_step)->capture_default_str();
    cmd->add_option("--p-offsets", leb.p_offsets, "p = N - 1 + offset")->delimiter(',')->capture_default_str();
    cmd->add_option("--a", leb.a_values, "Kernel shifts")->delimiter(',')->capture_default_str();
    cmd->add_option("--grid", leb.grid, "Number of equispaced grid points")->capture_default_str();
    cmd->add_option("--seed", leb.seed)->capture_default_str();
    cmd->add_option("--threads", leb.threads)->capture_default_str();
    add_output_options(cmd, leb.output);
    cmd->callback([&] {
        action = [&] { return run_lebesgue(leb); };
        output = &leb.output;
    });

    LagrangeOptions lag;
    cmd = app.add_subcommand("lagrange", "Lagrange functions on a grid");
    cmd->add_option("--points", lag.points, "CSV of points (default: generated nodes)");
    cmd->add_option("--nodes", lag.nodes, "Node family when --points is absent")->capture_default_str();
    cmd->add_option("--n", lag.n, "Number of generated nodes")->capture_default_str();
    cmd->add_option("--a", lag.a)->capture_default_str();
    cmd->add_option("--p", lag.p)->capture_default_str();
    cmd->add_option("--method", lag.method)->check(CLI::IsMember({"direct", "stable", "both"}))->capture_default_str();
    cmd->add_option("--grid", lag.grid)->capture_default_str();
    cmd->add_option("--seed", lag.seed)->capture_default_str();
    add_output_options(cmd, lag.output);
    cmd->callback([&] {
        action = [&] { return run_lagrange(lag); };
        output = &lag.output;
    });

    UnisolventOptions uni;
    cmd = app.add_subcommand("check-unisolvent", "Numerical rank of the Vandermonde matrix");
    cmd->add_option("--points", uni.points)->required();
    cmd->add_option("--a", uni.a)->capture_default_str();
    cmd->add_option("--p", uni.p)->required();
    add_output_options(cmd, uni.output);
    cmd->callback([&] {
        action = [&] { return run_check_unisolvent(uni); };
        output = &uni.output;
    });

    CompleteOptions comp;
    cmd = app.add_subcommand("complete-points", "Extend a point set to a unisolvent one");
    cmd->add_option("--points", comp.points)->required();
    cmd->add_option("--a", comp.a)->capture_default_str();
    cmd->add_option("--p", comp.p)->required();
    cmd->add_option("--budget", comp.budget, "Halton candidates (0: 512 d)")->capture_default_str();
    add_output_options(cmd, comp.output);
    cmd->callback([&] {
        action = [&] { return run_complete_points(comp); };
        output = &comp.output;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        emit(action(), *output, out);
        return kExitOk;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << '\n';
        return kExitIo;
    } catch (const InvalidArgument& e) {
        err << "invalid input: " << e.what() << '\n';
        return kExitParse;
    } catch (const UnsupportedFamily& e) {
        err << "invalid input: " << e.what() << '\n';
        return kExitParse;
    } catch (const NotUnisolvent& e) {
        err << "not unisolvent: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const SingularSystem& e) {
        err << "singular system: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const CompletionFailed& e) {
        err << "completion failed: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

} // namespace polykernel::cli
