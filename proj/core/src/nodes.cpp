#include "polykernel/errors.hpp"
#include "polykernel/unisolvency.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace polykernel {

namespace {

// sin of a symmetric integer grid keeps the nodes exactly symmetric about 0.
std::vector<double> chebyshev_first_kind(int n)
{
    std::vector<double> t(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        t[static_cast<std::size_t>(i)] = std::sin(std::numbers::pi * (2 * i - (n - 1)) / (2.0 * n));
    return t;
}

std::vector<double> chebyshev_lobatto(int n)
{
    if (n < 2)
        throw InvalidArgument("chebyshev-lobatto nodes need n >= 2");
    std::vector<double> t(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        t[static_cast<std::size_t>(i)] = std::sin(std::numbers::pi * (2 * i - (n - 1)) / (2.0 * (n - 1)));
    return t;
}

std::vector<double> equispaced_unit(int n)
{
    std::vector<double> t(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n && n > 1; ++i)
        t[static_cast<std::size_t>(i)] = static_cast<double>(2 * i - (n - 1)) / (n - 1);
    return t;
}

double to_box(double t, double lo, double hi)
{
    return 0.5 * (lo + hi) + 0.5 * (hi - lo) * t;
}

PointSet map_1d(const std::vector<double>& t, const Box& box)
{
    std::vector<double> x(t.size());
    for (std::size_t i = 0; i < t.size(); ++i)
        x[i] = to_box(t[i], box.lo[0], box.hi[0]);
    return PointSet::from_1d(x);
}

} // namespace

NodeFamily parse_node_family(std::string_view name)
{
    if (name == "chebyshev")
        return NodeFamily::chebyshev;
    if (name == "chebyshev-lobatto")
        return NodeFamily::chebyshev_lobatto;
    if (name == "equispaced")
        return NodeFamily::equispaced;
    if (name == "tensor-grid")
        return NodeFamily::tensor_grid;
    if (name == "random" || name == "uniform-random")
        return NodeFamily::uniform_random;
    throw UnsupportedFamily("unknown node family '" + std::string(name) + "'");
}

std::string to_string(NodeFamily family)
{
    switch (family) {
    case NodeFamily::chebyshev: return "chebyshev";
    case NodeFamily::chebyshev_lobatto: return "chebyshev-lobatto";
    case NodeFamily::equispaced: return "equispaced";
    case NodeFamily::tensor_grid: return "tensor-grid";
    case NodeFamily::uniform_random: return "random";
    }
    return "unknown";
}

PointSet equispaced_grid(int n, double lo, double hi)
{
    return generate_nodes(NodeFamily::equispaced, n, Box{{lo}, {hi}});
}

PointSet generate_nodes(NodeFamily family, int n, const Box& domain, std::uint64_t seed)
{
    if (n < 1)
        throw InvalidArgument("node count must be at least 1");
    const int d = domain.dim();
    if (d < 1 || domain.hi.size() != domain.lo.size())
        throw InvalidArgument("malformed domain box");
    for (int k = 0; k < d; ++k)
        if (!(domain.lo[k] <= domain.hi[k]))
            throw InvalidArgument("domain box has lo > hi");

    switch (family) {
    case NodeFamily::chebyshev:
    case NodeFamily::chebyshev_lobatto:
    case NodeFamily::equispaced:
        if (d != 1)
            throw UnsupportedFamily(to_string(family) + " nodes are only defined for d = 1");
        if (family == NodeFamily::chebyshev)
            return map_1d(chebyshev_first_kind(n), domain);
        if (family == NodeFamily::chebyshev_lobatto)
            return map_1d(chebyshev_lobatto(n), domain);
        return map_1d(equispaced_unit(n), domain);
    case NodeFamily::tensor_grid: {
        const std::vector<double> t = equispaced_unit(n);
        std::size_t total = 1;
        for (int k = 0; k < d; ++k)
            total *= static_cast<std::size_t>(n);
        PointMatrix pts(static_cast<Eigen::Index>(total), d);
        for (std::size_t r = 0; r < total; ++r) {
            std::size_t rem = r;
            for (int k = d - 1; k >= 0; --k) {
                pts(static_cast<Eigen::Index>(r), k) = to_box(t[rem % static_cast<std::size_t>(n)], domain.lo[k], domain.hi[k]);
                rem /= static_cast<std::size_t>(n);
            }
        }
        return PointSet(std::move(pts));
    }
    case NodeFamily::uniform_random: {
        // Explicit 53-bit conversion keeps the stream identical across standard libraries.
        std::mt19937_64 gen(seed);
        PointMatrix pts(n, d);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < d; ++k) {
                const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
                pts(i, k) = domain.lo[k] + (domain.hi[k] - domain.lo[k]) * u;
            }
        return PointSet(std::move(pts));
    }
    }
    throw UnsupportedFamily("unknown node family");
}

} // namespace polykernel
