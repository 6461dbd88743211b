#include "polykernel/kernel.hpp"

#include "polykernel/errors.hpp"

#include <cmath>

namespace polykernel {

namespace {

double dot(std::span<const double> x, std::span<const double> y)
{
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        s += x[i] * y[i];
    return s;
}

// powers(c, k) = x_c^k for k = 0..p, built by splitting k in halves.
Eigen::MatrixXd power_table(std::span<const double> x, int p)
{
    Eigen::MatrixXd t(static_cast<Eigen::Index>(x.size()), p + 1);
    for (std::size_t c = 0; c < x.size(); ++c) {
        const auto r = static_cast<Eigen::Index>(c);
        t(r, 0) = 1.0;
        if (p >= 1)
            t(r, 1) = x[c];
        for (int k = 2; k <= p; ++k)
            t(r, k) = t(r, k / 2) * t(r, k - k / 2);
    }
    return t;
}

double table_monomial(const Eigen::MatrixXd& table, const MultiIndex& zeta)
{
    double v = 1.0;
    for (std::size_t c = 0; c < zeta.size(); ++c)
        v *= table(static_cast<Eigen::Index>(c), zeta[c]);
    return v;
}

void check_dim(std::size_t got, int want)
{
    if (got != static_cast<std::size_t>(want))
        throw InvalidArgument("point dimension does not match kernel dimension");
}

} // namespace

double kernel_eval(std::span<const double> x, std::span<const double> y, const KernelParams& params)
{
    check_dim(x.size(), params.d);
    check_dim(y.size(), params.d);
    return std::pow(params.a + dot(x, y), params.p);
}

double monomial(std::span<const double> x, const MultiIndex& zeta)
{
    check_dim(x.size(), static_cast<int>(zeta.size()));
    int p = 0;
    for (std::size_t c = 0; c < zeta.size(); ++c)
        p = std::max(p, zeta[c]);
    return table_monomial(power_table(x, p), zeta);
}

Eigen::VectorXd feature_map(std::span<const double> x, const KernelParams& params, const IndexSet& idx)
{
    check_dim(x.size(), params.d);
    if (!(idx.params() == params))
        throw InvalidArgument("index set was built for different kernel parameters");
    const Eigen::MatrixXd table = power_table(x, params.p);
    Eigen::VectorXd phi(static_cast<Eigen::Index>(idx.size()));
    for (std::size_t j = 0; j < idx.size(); ++j)
        phi(static_cast<Eigen::Index>(j)) = std::sqrt(idx.coefficients()[j]) * table_monomial(table, idx[j]);
    return phi;
}

Eigen::MatrixXd vandermonde(const PointSet& X, const IndexSet& idx)
{
    const auto n = static_cast<Eigen::Index>(X.size());
    const auto m = static_cast<Eigen::Index>(idx.size());
    Eigen::MatrixXd V(n, m);
    if (n == 0)
        return V;
    check_dim(static_cast<std::size_t>(X.dim()), idx.params().d);
    for (Eigen::Index i = 0; i < n; ++i) {
        const Eigen::MatrixXd table = power_table(X.point(static_cast<std::size_t>(i)), idx.params().p);
        for (Eigen::Index j = 0; j < m; ++j)
            V(i, j) = table_monomial(table, idx[static_cast<std::size_t>(j)]);
    }
    return V;
}

Eigen::VectorXd coefficient_diagonal(const IndexSet& idx)
{
    const auto& c = idx.coefficients();
    return Eigen::Map<const Eigen::VectorXd>(c.data(), static_cast<Eigen::Index>(c.size()));
}

Eigen::MatrixXd kernel_matrix(const PointSet& X, const KernelParams& params)
{
    const auto n = static_cast<Eigen::Index>(X.size());
    Eigen::MatrixXd A(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i; j < n; ++j) {
            const double v = kernel_eval(X.point(static_cast<std::size_t>(i)),
                                         X.point(static_cast<std::size_t>(j)), params);
            A(i, j) = v;
            A(j, i) = v;
        }
    }
    return A;
}

Eigen::MatrixXd cross_kernel_matrix(const PointSet& Y, const PointSet& X, const KernelParams& params)
{
    const auto ny = static_cast<Eigen::Index>(Y.size());
    const auto nx = static_cast<Eigen::Index>(X.size());
    Eigen::MatrixXd K(ny, nx);
    for (Eigen::Index i = 0; i < ny; ++i)
        for (Eigen::Index j = 0; j < nx; ++j)
            K(i, j) = kernel_eval(Y.point(static_cast<std::size_t>(i)),
                                  X.point(static_cast<std::size_t>(j)), params);
    return K;
}

} // namespace polykernel
