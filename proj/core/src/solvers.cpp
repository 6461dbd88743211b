#include "polykernel/solvers.hpp"

#include "polykernel/errors.hpp"
#include "polykernel/kernel.hpp"

#include "compensated.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace polykernel {

namespace {

constexpr double kUnitRoundoff = std::numeric_limits<double>::epsilon() / 2;

// Refinement sweeps for the basis-coefficient solve.
constexpr int kRefinementSteps = 3;

void check_targets(const PointSet& X, const Eigen::MatrixXd& y)
{
    if (X.empty())
        throw InvalidArgument("interpolation needs at least one point");
    if (static_cast<std::size_t>(y.rows()) != X.size())
        throw InvalidArgument("number of values does not match number of points");
    if (y.cols() < 1)
        throw InvalidArgument("values must have at least one column");
}

void check_eval_dim(const PointSet& X_eval, int d)
{
    if (!X_eval.empty() && X_eval.dim() != d)
        throw InvalidArgument("evaluation points have the wrong dimension");
}

// Chooses the leading N columns of V by Householder elimination in canonical
// order, passing over columns that already lie in the span of the chosen ones.
std::vector<std::size_t> select_columns(const Eigen::MatrixXd& V, std::size_t& skipped)
{
    const Eigen::Index n = V.rows();
    const Eigen::Index m = V.cols();
    const Eigen::VectorXd norms = V.colwise().norm();

    Eigen::MatrixXd W = V;
    std::vector<std::size_t> remaining(static_cast<std::size_t>(m));
    for (std::size_t j = 0; j < remaining.size(); ++j)
        remaining[j] = j;
    std::vector<std::size_t> selected;
    selected.reserve(static_cast<std::size_t>(n));
    Eigen::VectorXd work(m);

    for (Eigen::Index k = 0; k < n; ++k) {
        std::size_t pick = 0;
        for (; pick < remaining.size(); ++pick) {
            const auto j = static_cast<Eigen::Index>(remaining[pick]);
            if (W.col(j).tail(n - k).norm() > kColumnDependenceTolerance * kUnitRoundoff * norms(j))
                break;
        }
        if (pick == remaining.size())
            throw NotUnisolvent("Vandermonde matrix does not have full row rank");
        const auto col = static_cast<Eigen::Index>(remaining[pick]);

        Eigen::VectorXd essential(n - k - 1);
        double tau = 0.0, beta = 0.0;
        W.col(col).tail(n - k).makeHouseholder(essential, tau, beta);
        W.bottomRows(n - k).applyHouseholderOnTheLeft(essential, tau, work.data());

        selected.push_back(remaining[pick]);
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(pick));
    }

    skipped = 0;
    for (std::size_t k = 0; k < selected.size(); ++k)
        if (selected[k] != k)
            ++skipped;
    selected.insert(selected.end(), remaining.begin(), remaining.end());
    return selected;
}

// A * B accumulated in doubled precision, returned as hi + lo.
void product_pair(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B, Eigen::MatrixXd& hi, Eigen::MatrixXd& lo)
{
    hi.resize(A.rows(), B.cols());
    lo.resize(A.rows(), B.cols());
    for (Eigen::Index j = 0; j < B.cols(); ++j)
        for (Eigen::Index i = 0; i < A.rows(); ++i) {
            detail::Dot2 acc;
            for (Eigen::Index k = 0; k < A.cols(); ++k)
                acc.add_product(A(i, k), B(k, j));
            const detail::Pair p = acc.pair();
            hi(i, j) = p.hi;
            lo(i, j) = p.lo;
        }
}

// base + sign (hi + lo) c with compensated accumulation.
Eigen::MatrixXd apply_pair(const Eigen::MatrixXd& hi, const Eigen::MatrixXd& lo, const Eigen::MatrixXd& c,
                           const Eigen::MatrixXd* base = nullptr, double sign = 1.0)
{
    Eigen::MatrixXd r(hi.rows(), c.cols());
    for (Eigen::Index j = 0; j < c.cols(); ++j)
        for (Eigen::Index i = 0; i < hi.rows(); ++i) {
            detail::Dot2 acc;
            if (base)
                acc.add((*base)(i, j));
            for (Eigen::Index k = 0; k < hi.cols(); ++k) {
                acc.add_product(sign * hi(i, k), c(k, j));
                acc.add_product(sign * lo(i, k), c(k, j));
            }
            r(i, j) = acc.value();
        }
    return r;
}

} // namespace

DirectInterpolant solve_direct(const PointSet& X, const Eigen::MatrixXd& y, const KernelParams& params)
{
    check_targets(X, y);
    if (X.dim() != params.d)
        throw InvalidArgument("point dimension does not match kernel dimension");
    if (!X.pairwise_distinct())
        throw SingularSystem("kernel matrix is singular: repeated points");

    const Eigen::MatrixXd A = kernel_matrix(X, params);
    Eigen::LDLT<Eigen::MatrixXd> ldlt(A);
    if (ldlt.info() != Eigen::Success)
        throw SingularSystem("LDL^T factorization of the kernel matrix failed");
    const Eigen::VectorXd piv = ldlt.vectorD();
    for (Eigen::Index i = 0; i < piv.size(); ++i)
        if (piv(i) == 0.0 || !std::isfinite(piv(i)))
            throw SingularSystem("LDL^T factorization of the kernel matrix hit a zero pivot");

    DirectInterpolant model;
    model.params = params;
    model.X = X;
    model.coefficients = ldlt.solve(y);
    const double rc = ldlt.rcond();
    model.condition_estimate = rc > 0.0 ? 1.0 / rc : std::numeric_limits<double>::infinity();
    if (!model.coefficients.allFinite())
        throw SingularSystem("kernel system produced non-finite coefficients");
    return model;
}

StableFactorization stable_factorization(const PointSet& X, const KernelParams& params)
{
    if (X.empty())
        throw InvalidArgument("interpolation needs at least one point");
    if (X.dim() != params.d)
        throw InvalidArgument("point dimension does not match kernel dimension");
    if (!X.pairwise_distinct())
        throw NotUnisolvent("point set contains repeated points");

    const IndexSet canonical = enumerate_index_set(params);
    const std::size_t n = X.size();
    const std::size_t m = canonical.size();
    if (n > m)
        throw NotUnisolvent("more points than the dimension of the polynomial space");

    const Eigen::MatrixXd V = vandermonde(X, canonical);
    StableFactorization f;
    f.perm = select_columns(V, f.skipped);
    f.ordering = canonical.permuted(f.perm);

    Eigen::MatrixXd Vp(V.rows(), V.cols());
    for (std::size_t j = 0; j < m; ++j)
        Vp.col(static_cast<Eigen::Index>(j)) = V.col(static_cast<Eigen::Index>(f.perm[j]));

    const auto N = static_cast<Eigen::Index>(n);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(Vp);
    f.Q = qr.householderQ() * Eigen::MatrixXd::Identity(N, N);
    const Eigen::MatrixXd R = qr.matrixQR().triangularView<Eigen::Upper>();
    f.R1 = R.leftCols(N);
    f.R2 = R.rightCols(static_cast<Eigen::Index>(m) - N);

    const Eigen::VectorXd D = coefficient_diagonal(f.ordering);
    f.D1 = D.head(N);
    f.D2 = D.tail(static_cast<Eigen::Index>(m) - N);
    return f;
}

Eigen::MatrixXd basis_change(const StableFactorization& f)
{
    const Eigen::Index n = f.R1.rows();
    const Eigen::Index rest = f.R2.cols();
    Eigen::MatrixXd C(n + rest, n);
    C.topRows(n).setIdentity();
    if (rest == 0)
        return C;
    // E = D2 R2^T R1^{-T} D1^{-1} = D2 (R1^{-1} R2)^T D1^{-1}
    const Eigen::MatrixXd T = f.R1.triangularView<Eigen::Upper>().solve(f.R2);
    for (Eigen::Index j = 0; j < rest; ++j)
        for (Eigen::Index i = 0; i < n; ++i)
            C(n + j, i) = (f.D2(j) / f.D1(i)) * T(i, j);
    return C;
}

StableInterpolant build_stable(const PointSet& X, const Eigen::MatrixXd& y, const KernelParams& params)
{
    check_targets(X, y);
    const StableFactorization f = stable_factorization(X, params);

    StableInterpolant model;
    model.params = params;
    model.X = X;
    model.ordering = f.ordering;
    model.C_u_prime = basis_change(f);

    // V_u(X) is formed in doubled precision and the LU solution is refined
    // against it; the plain solve loses several digits once V is ill-conditioned.
    Eigen::MatrixXd Vu, Vu_lo;
    product_pair(vandermonde(X, model.ordering), model.C_u_prime, Vu, Vu_lo);
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(Vu);
    const double rc = lu.rcond();
    model.condition_estimate = rc > 0.0 ? 1.0 / rc : std::numeric_limits<double>::infinity();
    model.c_u = lu.solve(y);
    for (int step = 0; step < kRefinementSteps && model.c_u.allFinite(); ++step)
        model.c_u += lu.solve(apply_pair(Vu, Vu_lo, model.c_u, &y, -1.0));
    if (!model.c_u.allFinite())
        throw NotUnisolvent("stable basis matrix is numerically singular");
    return model;
}

Eigen::MatrixXd evaluate(const StableInterpolant& model, const PointSet& X_eval)
{
    check_eval_dim(X_eval, model.params.d);
    if (X_eval.empty())
        return Eigen::MatrixXd(0, model.c_u.cols());
    Eigen::MatrixXd Vu, Vu_lo;
    product_pair(vandermonde(X_eval, model.ordering), model.C_u_prime, Vu, Vu_lo);
    return apply_pair(Vu, Vu_lo, model.c_u);
}

Eigen::MatrixXd evaluate(const DirectInterpolant& model, const PointSet& X_eval)
{
    check_eval_dim(X_eval, model.params.d);
    if (X_eval.empty())
        return Eigen::MatrixXd(0, model.coefficients.cols());
    return cross_kernel_matrix(X_eval, model.X, model.params) * model.coefficients;
}

Eigen::MatrixXd lagrange_basis(const PointSet& X, const KernelParams& params, const PointSet& X_eval)
{
    const auto n = static_cast<Eigen::Index>(X.size());
    return evaluate(build_stable(X, Eigen::MatrixXd::Identity(n, n), params), X_eval);
}

Eigen::MatrixXd lagrange_basis_direct(const PointSet& X, const KernelParams& params, const PointSet& X_eval)
{
    const auto n = static_cast<Eigen::Index>(X.size());
    return evaluate(solve_direct(X, Eigen::MatrixXd::Identity(n, n), params), X_eval);
}

} // namespace polykernel
