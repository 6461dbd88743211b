#include "polykernel/unisolvency.hpp"

#include "polykernel/errors.hpp"
#include "polykernel/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace polykernel {

namespace {

constexpr double kUnitRoundoff = std::numeric_limits<double>::epsilon() / 2;

Eigen::VectorXd singular_values(const Eigen::MatrixXd& M)
{
    if (M.rows() == 0 || M.cols() == 0)
        return Eigen::VectorXd();
    Eigen::BDCSVD<Eigen::MatrixXd> svd(M);
    return svd.singularValues();
}

// Smallest eigenvalue of the arrowhead matrix [diag(s2) z; z^T c], s2 ascending.
// Unique root below s2[0] of c - t - sum z_i^2 / (s2_i - t).
double arrowhead_min_eig(const Eigen::VectorXd& s2, const Eigen::VectorXd& z, double c)
{
    if (s2.size() == 0)
        return c;
    auto f = [&](double t) {
        double s = c - t;
        for (Eigen::Index i = 0; i < s2.size(); ++i)
            s -= z(i) * z(i) / (s2(i) - t);
        return s;
    };
    double hi = s2(0);
    double lo = std::min(0.0, c) - z.squaredNorm() - 1.0;
    if (z(0) == 0.0 && f(std::nextafter(hi, lo)) >= 0.0)
        return hi;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        (f(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<int> first_primes(int count)
{
    std::vector<int> primes;
    for (int c = 2; static_cast<int>(primes.size()) < count; ++c) {
        bool prime = true;
        for (int q : primes) {
            if (q * q > c)
                break;
            if (c % q == 0) {
                prime = false;
                break;
            }
        }
        if (prime)
            primes.push_back(c);
    }
    return primes;
}

} // namespace

double rank_threshold(double sigma_max, std::size_t rows, std::size_t cols)
{
    return sigma_max * static_cast<double>(std::max(rows, cols)) * kUnitRoundoff;
}

int default_candidate_budget(int d)
{
    return 512 * d;
}

UnisolvencyResult is_unisolvent(const PointSet& X, const KernelParams& params)
{
    if (!X.empty() && X.dim() != params.d)
        throw InvalidArgument("point dimension does not match kernel dimension");
    const IndexSet idx = enumerate_index_set(params);
    UnisolvencyResult r;
    const std::size_t n = X.size();
    const std::size_t m = idx.size();
    if (n == 0) {
        r.decision = true;
        return r;
    }

    const Eigen::VectorXd s = singular_values(vandermonde(X, idx));
    r.largest_singular_value = s(0);
    r.smallest_singular_value = n <= m ? s(s.size() - 1) : 0.0;
    r.threshold = rank_threshold(s(0), n, m);
    r.rank = static_cast<int>((s.array() > r.threshold).count());
    r.decision = n <= m && r.rank == static_cast<int>(n) && X.pairwise_distinct();
    return r;
}

PointMatrix halton(std::size_t n, int d)
{
    const std::vector<int> bases = first_primes(d);
    PointMatrix h(static_cast<Eigen::Index>(n), d);
    for (std::size_t i = 0; i < n; ++i) {
        for (int k = 0; k < d; ++k) {
            const int b = bases[static_cast<std::size_t>(k)];
            double f = 1.0, v = 0.0;
            for (std::size_t j = i + 1; j > 0; j /= static_cast<std::size_t>(b)) {
                f /= b;
                v += f * static_cast<double>(j % static_cast<std::size_t>(b));
            }
            h(static_cast<Eigen::Index>(i), k) = v;
        }
    }
    return h;
}

PointSet complete_to_unisolvent(const PointSet& X, const KernelParams& params, int candidate_budget)
{
    const UnisolvencyResult start = is_unisolvent(X, params);
    if (!start.decision)
        throw NotUnisolvent("input point set is not unisolvent; cannot complete it");
    const IndexSet idx = enumerate_index_set(params);
    const std::size_t m = idx.size();
    if (X.size() == m)
        return X;

    const int d = params.d;
    const int budget = candidate_budget > 0 ? candidate_budget : default_candidate_budget(d);

    // Inflated bounding box; degenerate extents fall back to unit width.
    Eigen::RowVectorXd lo(d), hi(d);
    if (X.empty()) {
        lo.setConstant(-1.0);
        hi.setConstant(1.0);
    } else {
        lo = X.coords().colwise().minCoeff();
        hi = X.coords().colwise().maxCoeff();
    }
    for (int k = 0; k < d; ++k) {
        double w = hi(k) - lo(k);
        if (!(w > 0.0)) {
            const double c = 0.5 * (lo(k) + hi(k));
            lo(k) = c - 0.5;
            hi(k) = c + 0.5;
            w = 1.0;
        }
        lo(k) -= 0.5 * w;
        hi(k) += 0.5 * w;
    }
    PointMatrix cand = halton(static_cast<std::size_t>(budget), d);
    for (Eigen::Index i = 0; i < cand.rows(); ++i)
        cand.row(i) = lo.array() + cand.row(i).array() * (hi - lo).array();
    const Eigen::MatrixXd Vc = vandermonde(PointSet(cand), idx);

    Eigen::MatrixXd B = vandermonde(X, idx);
    PointMatrix pts = X.empty() ? PointMatrix(0, d) : X.coords();
    std::vector<bool> used(static_cast<std::size_t>(budget), false);

    while (static_cast<std::size_t>(B.rows()) < m) {
        // sigma_min^2 of [B; v] is the smallest eigenvalue of the bordered Gram
        // matrix, which in the singular basis of B is an arrowhead matrix.
        Eigen::VectorXd s2;
        Eigen::MatrixXd W;
        if (B.rows() > 0) {
            Eigen::JacobiSVD<Eigen::MatrixXd> svd(B, Eigen::ComputeThinV);
            const Eigen::VectorXd s = svd.singularValues().reverse();
            s2 = s.cwiseProduct(s);
            W = svd.matrixV().rowwise().reverse();
            W = W * s.asDiagonal();
        }
        double best = -std::numeric_limits<double>::infinity();
        Eigen::Index best_i = -1;
        for (Eigen::Index i = 0; i < Vc.rows(); ++i) {
            if (used[static_cast<std::size_t>(i)])
                continue;
            const Eigen::VectorXd v = Vc.row(i).transpose();
            const Eigen::VectorXd z = B.rows() > 0 ? Eigen::VectorXd(W.transpose() * v) : Eigen::VectorXd();
            const double lam = arrowhead_min_eig(s2, z, v.squaredNorm());
            if (lam > best) {
                best = lam;
                best_i = i;
            }
        }
        if (best_i < 0 || !(best > 0.0))
            throw CompletionFailed("no candidate increases the rank; enlarge the candidate budget");
        used[static_cast<std::size_t>(best_i)] = true;
        B.conservativeResize(B.rows() + 1, Eigen::NoChange);
        B.row(B.rows() - 1) = Vc.row(best_i);
        pts.conservativeResize(pts.rows() + 1, Eigen::NoChange);
        pts.row(pts.rows() - 1) = cand.row(best_i);
    }

    const Eigen::VectorXd s = singular_values(B);
    if (!(s(s.size() - 1) > rank_threshold(s(0), m, m)))
        throw CompletionFailed("completed Vandermonde matrix is numerically singular");
    return PointSet(std::move(pts));
}

} // namespace polykernel
