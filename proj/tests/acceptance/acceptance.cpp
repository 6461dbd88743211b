// Acceptance checks. Run without arguments for all twelve, or pass criterion numbers.
// Prints one "criterion NN PASS|FAIL ..." line per criterion; exit status 1 if any fails.

#include "../oracles.hpp"

#include <polykernel/polykernel.hpp>
#include <polykernel_cli/experiments.hpp>

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

using namespace polykernel;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(double v, int digits = 3)
{
    std::ostringstream s;
    s.precision(digits);
    s << v;
    return s.str();
}

std::vector<oracle::Point> to_points(const PointSet& X)
{
    std::vector<oracle::Point> out;
    for (std::size_t i = 0; i < X.size(); ++i) {
        const auto p = X.point(i);
        out.emplace_back(p.begin(), p.end());
    }
    return out;
}

std::vector<double> to_1d(const PointSet& X)
{
    std::vector<double> out;
    for (std::size_t i = 0; i < X.size(); ++i)
        out.push_back(X.point(i)[0]);
    return out;
}

PointSet uniform_points(std::mt19937_64& gen, int n, int d)
{
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    PointMatrix P(n, d);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < d; ++k)
            P(i, k) = U(gen);
    return PointSet(P);
}

// Uniform points in [-1,1]^d whose pairwise max-norm distance is at least sep.
PointSet separated_points(std::mt19937_64& gen, int n, int d, double sep)
{
    while (true) {
        PointSet X = uniform_points(gen, n, d);
        if (n < 2 || oracle::min_separation(to_points(X)) >= sep)
            return X;
    }
}

const std::vector<cli::ConvergenceRow>& convergence_rows(double* seconds = nullptr)
{
    static double elapsed = 0.0;
    static const std::vector<cli::ConvergenceRow> rows = [] {
        cli::ConvergenceConfig config;
        config.n_min = 5;
        config.n_max = 50;
        const auto t0 = std::chrono::steady_clock::now();
        auto r = cli::convergence_sweep(config);
        elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return r;
    }();
    if (seconds)
        *seconds = elapsed;
    return rows;
}

using CellKey = std::tuple<int, int, double>; // (N, p offset, a)

std::map<CellKey, double> errors_by_cell(cli::Method method)
{
    std::map<CellKey, double> out;
    for (const auto& row : convergence_rows())
        if (row.method == method)
            out[{row.n, row.p - (row.n - 1), row.a}] = row.max_abs_error;
    return out;
}

// ---------------------------------------------------------------------------

Outcome criterion_1()
{
    double seconds = 0.0;
    convergence_rows(&seconds);
    const auto stable = errors_by_cell(cli::Method::stable);
    const std::vector<int> offsets{0, 2, 4, 6};
    const std::vector<double> as{5.0, 10.0};

    bool ok = true;
    double worst_n30 = 0.0;
    double worst_ratio = 0.0;
    for (int off : offsets)
        for (double a : as) {
            const double e30 = stable.at({30, off, a});
            if (!(e30 <= 1e-10))
                ok = false;
            worst_n30 = std::max(worst_n30, std::isnan(e30) ? INFINITY : e30);
            double running_min = stable.at({5, off, a});
            for (int n = 6; n <= 30; ++n) {
                const double e = stable.at({n, off, a});
                const double ratio = e / running_min;
                if (!(ratio <= 10.0))
                    ok = false;
                worst_ratio = std::max(worst_ratio, std::isnan(ratio) ? INFINITY : ratio);
                running_min = std::min(running_min, e);
            }
        }
    if (!(seconds < 30.0))
        ok = false;
    return {ok, "max stable error at N=30: " + fmt(worst_n30) + " (<= 1e-10); worst error / running min for N<=30: "
                    + fmt(worst_ratio) + " (<= 10); sweep N=5..50 both methods: " + fmt(seconds) + " s (< 30 s)"};
}

Outcome criterion_2()
{
    const auto stable = errors_by_cell(cli::Method::stable);
    const auto direct = errors_by_cell(cli::Method::direct);
    int hits = 0;
    double best = 0.0;
    std::optional<CellKey> first;
    for (const auto& [key, es] : stable) {
        if (std::get<0>(key) > 30)
            continue;
        const double ed = direct.at(key);
        if (std::isnan(ed) || std::isnan(es) || es <= 0.0)
            continue;
        const double ratio = ed / es;
        best = std::max(best, ratio);
        if (ratio >= 1e4) {
            ++hits;
            if (!first)
                first = key;
        }
    }
    std::string detail = std::to_string(hits) + " cells with N<=30 where direct error >= 1e4 x stable error; largest ratio "
                         + fmt(best);
    if (first)
        detail += "; first at N=" + std::to_string(std::get<0>(*first)) + ", p=N-1+" + std::to_string(std::get<1>(*first))
                  + ", a=" + fmt(std::get<2>(*first));
    return {hits > 0, detail};
}

Outcome criterion_3()
{
    const PointSet grid = evaluation_grid(Box::unit(1), 1000);
    const std::vector<double> g = to_1d(grid);
    std::vector<std::function<double(double)>> fs{[](double x) { return std::cos(10.0 * x); },
                                                  [](double x) { return 1.0 / (1.0 + 25.0 * x * x); }};
    double worst = 0.0;
    bool ok = true;
    for (double a : {1.0, 5.0})
        for (int n = 2; n <= 12; ++n)
            for (const auto& f : fs) {
                const KernelParams params(a, n - 1, 1);
                const PointSet X = generate_nodes(NodeFamily::chebyshev, n, Box::unit(1));
                const std::vector<double> xs = to_1d(X);
                std::vector<double> ys;
                Eigen::MatrixXd y(n, 1);
                for (int i = 0; i < n; ++i) {
                    ys.push_back(f(xs[static_cast<std::size_t>(i)]));
                    y(i, 0) = ys.back();
                }
                const Eigen::MatrixXd s = evaluate(build_stable(X, y, params), grid);
                const auto c = oracle::vandermonde_solve(xs, ys);
                for (std::size_t i = 0; i < g.size(); ++i) {
                    const double diff = static_cast<double>(std::fabs(s(static_cast<Eigen::Index>(i), 0) - oracle::horner(c, g[i])));
                    if (!(diff <= 1e-8))
                        ok = false;
                    worst = std::max(worst, std::isnan(diff) ? INFINITY : diff);
                }
            }
    return {ok, "max |kernel - polynomial| over N=2..12, a in {1,5}, 2 functions: " + fmt(worst) + " (<= 1e-8)"};
}

Outcome criterion_4()
{
    std::mt19937_64 gen(4004);
    const std::array<double, 3> as{0.0, 1.0, 5.0};
    double worst = 0.0;
    for (int t = 0; t < 50; ++t) {
        const int n = 1 + static_cast<int>(gen() % 20);
        const int d = 1 + static_cast<int>(gen() % 3);
        const int p = 1 + static_cast<int>(gen() % 10);
        const double a = as[gen() % 3];
        const KernelParams params(a, p, d);
        const PointSet X = uniform_points(gen, n, d);
        const IndexSet idx = enumerate_index_set(params);
        const Eigen::MatrixXd V = vandermonde(X, idx);
        const Eigen::MatrixXd A = kernel_matrix(X, params);
        const Eigen::MatrixXd F = V * coefficient_diagonal(idx).asDiagonal() * V.transpose();
        worst = std::max(worst, (A - F).norm() / A.norm());
    }
    return {worst <= 1e-12, "max ||A - V D V^T||_F / ||A||_F over 50 instances: " + fmt(worst) + " (<= 1e-12)"};
}

Outcome criterion_5()
{
    std::mt19937_64 gen(5005);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    const std::array<double, 3> as{0.0, 1.0, 5.0};
    constexpr double u = std::numeric_limits<double>::epsilon() / 2;
    int agree = 0, unisolvent = 0;
    double generic_min = INFINITY, degenerate_max = -INFINITY;
    std::string first_mismatch;
    for (int t = 0; t < 200; ++t) {
        const int kind = t % 5;
        int d = 0, p = 0, n = 0;
        double a = 0.0;
        PointSet X;
        auto draw_params = [&](int d_fixed, std::optional<double> a_fixed) {
            d = d_fixed ? d_fixed : 1 + static_cast<int>(gen() % 2);
            a = a_fixed ? *a_fixed : as[gen() % 3];
            p = 1 + static_cast<int>(gen() % 8);
            return std::min<int>(12, static_cast<int>(index_set_size(KernelParams(a, p, d))));
        };
        if (kind <= 1) {
            const int nmax = draw_params(0, std::nullopt);
            n = 1 + static_cast<int>(gen() % static_cast<unsigned>(nmax));
            X = separated_points(gen, n, d, 0.1);
        } else if (kind == 2) {
            int nmax = 0;
            while ((nmax = draw_params(0, std::nullopt)) < 2) {
            }
            n = 2 + static_cast<int>(gen() % static_cast<unsigned>(nmax - 1));
            PointMatrix P = separated_points(gen, n, d, 0.1).coords();
            P.row(n - 1) = P.row(static_cast<Eigen::Index>(gen() % static_cast<unsigned>(n - 1)));
            X = PointSet(P);
        } else if (kind == 3) {
            const int nmax = draw_params(0, 0.0);
            n = 1 + static_cast<int>(gen() % static_cast<unsigned>(nmax));
            PointMatrix P = separated_points(gen, n, d, 0.1).coords();
            P.row(0).setZero();
            X = PointSet(P);
        } else {
            const int nmax = draw_params(2, std::nullopt);
            const int need = a > 0.0 ? p + 2 : 2;
            n = need + static_cast<int>(gen() % static_cast<unsigned>(nmax - need + 1));
            PointMatrix P(n, 2);
            do {
                for (int i = 0; i < n; ++i) {
                    const double s = U(gen);
                    P(i, 0) = s;
                    P(i, 1) = -s;
                }
            } while (oracle::min_separation(to_points(PointSet(P))) < 0.1);
            X = PointSet(P);
        }
        const KernelParams params(a, p, d);
        const bool decision = is_unisolvent(X, params).decision;
        const double pivot = oracle::scaled_min_pivot(to_points(X), a, p);
        const bool pd = pivot > n * u;
        if (kind <= 1)
            generic_min = std::min(generic_min, pivot);
        else
            degenerate_max = std::max(degenerate_max, pivot);
        unisolvent += decision;
        if (decision == pd)
            ++agree;
        else if (first_mismatch.empty())
            first_mismatch = "; first mismatch: instance " + std::to_string(t) + " (d=" + std::to_string(d) + ", a="
                             + fmt(a) + ", p=" + std::to_string(p) + ", N=" + std::to_string(n) + ", pivot " + fmt(pivot)
                             + ", rank decision " + (decision ? "true" : "false") + ")";
    }
    return {agree == 200, std::to_string(agree) + "/200 agree (" + std::to_string(unisolvent)
                              + " unisolvent); scaled pivot: generic min " + fmt(generic_min) + ", degenerate max "
                              + fmt(degenerate_max) + ", tolerance N*u" + first_mismatch};
}

Outcome criterion_6()
{
    std::mt19937_64 gen(6006);
    int ok = 0;
    for (int t = 0; t < 200; ++t) {
        const int d = 1 + static_cast<int>(gen() % 2);
        const int n = 2 + static_cast<int>(gen() % 4);
        PointSet X;
        do {
            X = uniform_points(gen, n, d);
        } while (!X.pairwise_distinct());
        if (is_unisolvent(X, KernelParams(1.0, d * (n - 1), d)).decision)
            ++ok;
    }
    return {ok == 200, std::to_string(ok) + "/200 trials unisolvent (N in 2..5, d in {1,2}, a=1, p=d(N-1))"};
}

PolynomialRep random_polynomial(std::mt19937_64& gen, const IndexSet& idx, bool top_degree_only = false)
{
    std::normal_distribution<double> G;
    Eigen::VectorXd c = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(idx.size()));
    for (std::size_t j = 0; j < idx.size(); ++j)
        if (!top_degree_only || idx[j].degree() == idx.params().p)
            c(static_cast<Eigen::Index>(j)) = G(gen);
    return PolynomialRep(idx, c);
}

long double oracle_value(const PolynomialRep& f, const oracle::Point& y)
{
    long double s = 0.0L;
    for (const auto& [z, c] : f.terms())
        s += static_cast<long double>(c) * oracle::monomial<long double>(y, z.exponents());
    return s;
}

long double oracle_norm(const std::vector<PolynomialRep::Term>& terms, double a, int p)
{
    long double s = 0.0L;
    for (const auto& [z, c] : terms)
        s += static_cast<long double>(c) * c / oracle::d_coeff(z.exponents(), a, p);
    return std::sqrt(s);
}

Outcome criterion_7()
{
    std::mt19937_64 gen(7007);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    const std::array<double, 3> as{0.5, 1.0, 5.0};
    double worst = 0.0;
    int bad = 0;
    for (int t = 0; t < 200; ++t) {
        const bool homogeneous = t >= 100;
        const int d = 1 + static_cast<int>(gen() % 2);
        const int p = 1 + static_cast<int>(gen() % 8);
        const double a = homogeneous ? 0.0 : as[gen() % 3];
        const KernelParams params(a, p, d);
        const IndexSet idx = enumerate_index_set(params);
        const PolynomialRep f = random_polynomial(gen, idx);
        oracle::Point y(static_cast<std::size_t>(d));
        for (double& v : y)
            v = U(gen);
        const double lhs = native_inner(f, PolynomialRep::kernel_section(idx, y), params);
        const long double fy = oracle_value(f, y);
        const double err = static_cast<double>(std::fabs(lhs - fy) / (1.0L + std::fabs(fy)));
        if (!(err <= 1e-10))
            ++bad;
        worst = std::max(worst, std::isnan(err) ? INFINITY : err);
    }
    return {bad == 0, "max |<f,k(.,y)> - f(y)| / (1+|f(y)|): " + fmt(worst)
                          + " (<= 1e-10) over 100 cases with a in {0.5,1,5} and 100 homogeneous cases with a=0"};
}

Outcome criterion_8()
{
    std::mt19937_64 gen(8008);
    std::uniform_real_distribution<double> U01(0.0, 1.0);
    constexpr double tol = 1e-10;
    int bad_random = 0;
    double worst_violation = 0.0;
    auto violation = [](double lower, double middle, double upper) {
        return std::max({0.0, (lower - middle) / middle, (middle - upper) / middle});
    };

    for (int t = 0; t < 100; ++t) {
        const int d = 1 + static_cast<int>(gen() % 2);
        const int p = 1 + static_cast<int>(gen() % 8);
        const double a = 0.5 + 4.5 * U01(gen);
        const double a_prime = a * (0.1 + 0.9 * U01(gen));
        const IndexSet idx = enumerate_index_set(KernelParams(a_prime, p, d));
        const PolynomialRep f = random_polynomial(gen, idx);
        const NormEquivalence r = norm_equivalence_a(f, a, a_prime, p);
        const auto terms = f.terms();
        const double na = static_cast<double>(oracle_norm(terms, a, p));
        const double nap = static_cast<double>(oracle_norm(terms, a_prime, p));
        const double v = violation(std::pow(a_prime / a, p / 2.0) * nap, na, nap);
        worst_violation = std::max(worst_violation, v);
        if (!(r.lower_ok && r.upper_ok && v <= tol && std::abs(r.middle - na) <= 1e-12 * na))
            ++bad_random;
    }
    for (int t = 0; t < 100; ++t) {
        const int d = 1 + static_cast<int>(gen() % 2);
        const int p = 1 + static_cast<int>(gen() % 8);
        const int q = static_cast<int>(gen() % static_cast<unsigned>(p + 1));
        const double a = 0.5 + 4.5 * U01(gen);
        const IndexSet idx = enumerate_index_set(KernelParams(a, p, d));
        std::normal_distribution<double> G;
        Eigen::VectorXd c = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(idx.size()));
        for (std::size_t j = 0; j < idx.size(); ++j)
            if (idx[j].degree() <= q)
                c(static_cast<Eigen::Index>(j)) = G(gen);
        const PolynomialRep f(idx, c);
        const NormEquivalence r = norm_equivalence_pq(f, a, p, q);
        const auto terms = f.terms();
        const double np = static_cast<double>(oracle_norm(terms, a, p));
        const double nq = static_cast<double>(oracle_norm(terms, a, q));
        const double scale = std::pow(a, (p - q) / 2.0);
        const double v = violation(scale * np, nq, scale * std::sqrt(static_cast<double>(oracle::binomial(p, q))) * np);
        worst_violation = std::max(worst_violation, v);
        if (!(r.lower_ok && r.upper_ok && v <= tol))
            ++bad_random;
    }

    // Sharpness: monomials of extreme degree.
    double worst_gap = 0.0;
    for (int d = 1; d <= 2; ++d)
        for (int p = 1; p <= 6; ++p) {
            const double a = 3.0, a_prime = 0.75;
            const IndexSet idx = enumerate_index_set(KernelParams(a_prime, p, d));
            for (std::size_t j = 0; j < idx.size(); ++j) {
                const int deg = idx[j].degree();
                if (deg != 0 && deg != p)
                    continue;
                const PolynomialRep f = PolynomialRep::from_terms(idx, {{idx[j], 1.0}});
                const NormEquivalence r = norm_equivalence_a(f, a, a_prime, p);
                worst_gap = std::max(worst_gap, deg == p ? std::abs(r.upper_gap) : std::abs(r.lower_gap));
            }
            for (int q = 0; q <= p; ++q) {
                const IndexSet pidx = enumerate_index_set(KernelParams(a, p, d));
                for (std::size_t j = 0; j < pidx.size(); ++j) {
                    const int deg = pidx[j].degree();
                    if (deg != 0 && deg != q)
                        continue;
                    const PolynomialRep f = PolynomialRep::from_terms(pidx, {{pidx[j], 1.0}});
                    const NormEquivalence r = norm_equivalence_pq(f, a, p, q);
                    if (deg == q)
                        worst_gap = std::max(worst_gap, std::abs(r.upper_gap));
                    if (deg == 0)
                        worst_gap = std::max(worst_gap, std::abs(r.lower_gap));
                }
            }
        }
    return {bad_random == 0 && worst_gap <= 1e-12,
            std::to_string(200 - bad_random) + "/200 random f satisfy both chains (worst relative violation "
                + fmt(worst_violation) + ", tolerance 1e-10); max gap at sharpness monomials " + fmt(worst_gap)
                + " (<= 1e-12)"};
}

struct PfCase {
    KernelParams params;
    PointSet X;
};

Outcome criterion_9()
{
    std::mt19937_64 gen(9009);
    std::vector<PfCase> partial{
        {KernelParams(1.0, 8, 1), uniform_points(gen, 5, 1)},
        {KernelParams(5.0, 4, 1), generate_nodes(NodeFamily::chebyshev, 4, Box::unit(1))},
        {KernelParams(1.0, 4, 2), uniform_points(gen, 8, 2)},
        {KernelParams(0.5, 3, 2), uniform_points(gen, 6, 2)},
        {KernelParams(0.0, 4, 2), uniform_points(gen, 3, 2)},
    };
    std::vector<PfCase> complete{
        {KernelParams(1.0, 6, 1), generate_nodes(NodeFamily::chebyshev, 7, Box::unit(1))},
        {KernelParams(5.0, 3, 1), generate_nodes(NodeFamily::equispaced, 4, Box::unit(1))},
        {KernelParams(1.0, 3, 2), uniform_points(gen, 10, 2)},
        {KernelParams(0.0, 3, 2), uniform_points(gen, 4, 2)},
    };

    double node_max = 0.0;
    for (const auto* set : {&partial, &complete})
        for (const auto& c : *set)
            for (std::size_t i = 0; i < c.X.size(); ++i)
                node_max = std::max(node_max, power_function(c.X, c.params, c.X.point(i)));

    auto grid_for = [](int d) {
        if (d == 1)
            return equispaced_grid(200);
        PointMatrix H = halton(200, d);
        return PointSet(PointMatrix((2.0 * H.array() - 1.0).matrix()));
    };
    double complete_max = 0.0;
    for (const auto& c : complete)
        complete_max = std::max(complete_max, power_function(c.X, c.params, grid_for(c.params.d)).maxCoeff());

    // |f(x) - I f(x)| <= P(x) ||f|| for f in the native space.
    double worst_excess = -INFINITY;
    int trials = 0;
    for (int t = 0; t < 50; ++t) {
        const PfCase& c = partial[static_cast<std::size_t>(t) % partial.size()];
        const IndexSet idx = enumerate_index_set(c.params);
        const PolynomialRep f = random_polynomial(gen, idx);
        const double norm = static_cast<double>(oracle_norm(f.terms(), c.params.a, c.params.p));
        const PointSet grid = grid_for(c.params.d);
        Eigen::MatrixXd y(static_cast<Eigen::Index>(c.X.size()), 1);
        for (std::size_t i = 0; i < c.X.size(); ++i) {
            const auto pt = c.X.point(i);
            y(static_cast<Eigen::Index>(i), 0) = static_cast<double>(oracle_value(f, oracle::Point(pt.begin(), pt.end())));
        }
        const Eigen::MatrixXd If = evaluate(build_stable(c.X, y, c.params), grid);
        const Eigen::VectorXd P = power_function(c.X, c.params, grid);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const auto pt = grid.point(i);
            const double fx = static_cast<double>(oracle_value(f, oracle::Point(pt.begin(), pt.end())));
            const auto k = static_cast<Eigen::Index>(i);
            worst_excess = std::max(worst_excess, std::abs(fx - If(k, 0)) - P(k) * norm);
        }
        ++trials;
    }
    const bool ok = node_max <= 1e-7 && complete_max <= 1e-7 && worst_excess <= 1e-9;
    return {ok, "max P at nodes " + fmt(node_max) + " (<= 1e-7); max P on 200 points with N=M_a " + fmt(complete_max)
                    + " (<= 1e-7); max |f-If| - P ||f|| over " + std::to_string(trials) + " f: " + fmt(worst_excess)
                    + " (<= 1e-9)"};
}

double kernel_lebesgue(NodeFamily family, int n, double a, int p, const PointSet& grid)
{
    const PointSet X = generate_nodes(family, n, Box::unit(1));
    return lebesgue_function(X, KernelParams(a, p, 1), grid).constant;
}

Outcome criterion_10()
{
    const PointSet grid = evaluation_grid(Box::unit(1), 1000);
    const std::vector<double> g = to_1d(grid);
    double worst_rel = 0.0;
    for (int n = 2; n <= 30; ++n) {
        const PointSet X = generate_nodes(NodeFamily::chebyshev, n, Box::unit(1));
        const double ref = static_cast<double>(oracle::polynomial_lebesgue_constant(to_1d(X), g));
        for (double a : {5.0, 10.0})
            worst_rel = std::max(worst_rel, std::abs(kernel_lebesgue(NodeFamily::chebyshev, n, a, n - 1, grid) / ref - 1.0));
    }
    double cheb45 = 0.0;
    for (int off : {0, 2, 4, 6})
        for (double a : {5.0, 10.0})
            cheb45 = std::max(cheb45, kernel_lebesgue(NodeFamily::chebyshev, 45, a, 44 + off, grid));
    double equi25 = INFINITY;
    for (double a : {5.0, 10.0})
        equi25 = std::min(equi25, kernel_lebesgue(NodeFamily::equispaced, 25, a, 24, grid));
    const bool ok = worst_rel <= 0.01 && cheb45 < 5.0 && equi25 > 1e3;
    return {ok, "Chebyshev p=N-1, N=2..30, a in {5,10}: max relative deviation from polynomial Lebesgue constant "
                    + fmt(worst_rel) + " (<= 0.01); max Chebyshev N=45: " + fmt(cheb45, 4)
                    + " (< 5); min equispaced N=25, p=24: " + fmt(equi25, 4) + " (> 1e3)"};
}

std::vector<double> p_sweep(NodeFamily family, const std::vector<int>& ps, const PointSet& grid)
{
    std::vector<double> out;
    for (int p : ps)
        out.push_back(kernel_lebesgue(family, 5, 5.0, p, grid));
    return out;
}

std::string list(const std::vector<int>& ps, const std::vector<double>& vals)
{
    std::string s;
    for (std::size_t i = 0; i < ps.size(); ++i)
        s += (i ? ", " : "") + std::string("p=") + std::to_string(ps[i]) + ": " + fmt(vals[i], 6);
    return s;
}

Outcome criterion_11()
{
    const PointSet grid = evaluation_grid(Box::unit(1), 1000);
    const std::vector<int> ps{4, 14, 24, 34};
    const std::vector<double> lobatto = p_sweep(NodeFamily::chebyshev_lobatto, ps, grid);
    const auto argmin = static_cast<std::size_t>(std::min_element(lobatto.begin(), lobatto.end()) - lobatto.begin());
    const std::vector<double> first_kind = p_sweep(NodeFamily::chebyshev, ps, grid);
    std::cout << "criterion 11 info: first-kind chebyshev nodes, " << list(ps, first_kind) << '\n';
    return {ps[argmin] > 4, "chebyshev-lobatto nodes, N=5, a=5: " + list(ps, lobatto) + "; minimum at p="
                                + std::to_string(ps[argmin]) + " (> 4)"};
}

// ---------------------------------------------------------------------------

std::string run_capture(const std::string& command)
{
    std::string out;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe)
        return "<popen failed>";
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), got);
    const int status = pclose(pipe);
    out += "\n<status " + std::to_string(status) + ">";
    return out;
}

std::string slurp(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome criterion_12()
{
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / ("polykernel_acceptance_" + std::to_string(getpid()));
    fs::create_directories(dir);
    {
        std::ofstream(dir / "points.csv") << "x1,x2\n-0.5,0.25\n0.75,-0.5\n0.1,0.9\n-0.8,-0.6\n0.3,0.2\n0.6,0.7\n";
        std::ofstream(dir / "values.csv") << "1\n2\n3\n4\n5\n6\n";
        std::ofstream(dir / "eval.csv") << "0,0\n0.5,0.5\n-1,1\n";
    }
    const std::string bin = POLYKERNEL_CLI_PATH;
    const std::string in = " --points " + (dir / "points.csv").string();
    const std::vector<std::pair<std::string, std::string>> commands{
        {"interpolate", "interpolate" + in + " --values " + (dir / "values.csv").string() + " --eval "
                            + (dir / "eval.csv").string() + " --a 1 --p 3 --method both"},
        {"interpolate json", "interpolate" + in + " --values " + (dir / "values.csv").string() + " --eval "
                                 + (dir / "eval.csv").string() + " --a 1 --p 3 --format json"},
        {"convergence", "convergence --n-max 20 --nodes random --seed 7 --threads 1"},
        {"convergence threaded", "convergence --n-max 20 --nodes random --seed 7 --threads 3"},
        {"lebesgue", "lebesgue --n-max 20 --threads 1"},
        {"lebesgue threaded", "lebesgue --n-max 20 --threads 3"},
        {"lagrange", "lagrange --grid 200"},
        {"lagrange random", "lagrange --nodes random --n 8 --seed 11 --a 1 --p 9"},
        {"check-unisolvent", "check-unisolvent" + in + " --a 1 --p 2"},
        {"complete-points", "complete-points" + in + " --a 1 --p 3"},
    };

    int identical = 0;
    std::string failures;
    std::map<std::string, std::string> first_outputs;
    for (const auto& [name, args] : commands) {
        const std::string a = run_capture(bin + " " + args + " 2>&1");
        const std::string b = run_capture(bin + " " + args + " 2>&1");
        const fs::path out1 = dir / "out1.csv", out2 = dir / "out2.csv";
        run_capture(bin + " " + args + " --out " + out1.string());
        run_capture(bin + " " + args + " --out " + out2.string());
        const std::string f1 = slurp(out1), f2 = slurp(out2);
        const bool ok = a == b && f1 == f2 && !f1.empty() && a.find("<status 0>") != std::string::npos;
        first_outputs[name] = f1;
        if (ok)
            ++identical;
        else
            failures += " " + name;
    }
    // Thread count must not change the output.
    bool thread_ok = first_outputs["convergence"] == first_outputs["convergence threaded"]
                     && first_outputs["lebesgue"] == first_outputs["lebesgue threaded"];
    fs::remove_all(dir);
    const bool ok = identical == static_cast<int>(commands.size()) && thread_ok;
    return {ok, std::to_string(identical) + "/" + std::to_string(commands.size())
                    + " commands byte-identical across repeated runs (stdout and --out); threads 1 vs 3 identical: "
                    + (thread_ok ? "yes" : "no") + (failures.empty() ? "" : "; differing:" + failures)};
}

} // namespace

int main(int argc, char** argv)
{
    const std::vector<std::function<Outcome()>> criteria{criterion_1, criterion_2, criterion_3,  criterion_4,
                                                         criterion_5, criterion_6, criterion_7,  criterion_8,
                                                         criterion_9, criterion_10, criterion_11, criterion_12};
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i)
        selected.push_back(std::atoi(argv[i]));
    if (selected.empty())
        for (int k = 1; k <= 12; ++k)
            selected.push_back(k);

    int failed = 0;
    for (int k : selected) {
        if (k < 1 || k > 12) {
            std::cerr << "no criterion " << k << '\n';
            return 2;
        }
        Outcome r;
        try {
            r = criteria[static_cast<std::size_t>(k - 1)]();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        std::printf("criterion %02d %s  %s\n", k, r.pass ? "PASS" : "FAIL", r.detail.c_str());
        std::fflush(stdout);
        failed += !r.pass;
    }
    return failed ? 1 : 0;
}
