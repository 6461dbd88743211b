#include "polykernel/native_space.hpp"

#include "polykernel/errors.hpp"
#include "polykernel/kernel.hpp"
#include "polykernel/unisolvency.hpp"

#include "compensated.hpp"

#include <cmath>
#include <map>

namespace polykernel {

namespace {

using detail::CompensatedSum;

// log d_zeta for degree p >= 0, a >= 0.
double log_d(const MultiIndex& zeta, double a, int p)
{
    const int k = zeta.degree();
    double s = std::lgamma(p + 1.0) - zeta.log_factorial();
    if (a > 0.0) {
        s -= std::lgamma(p - k + 1.0);
        if (p > k)
            s += (p - k) * std::log(a);
    }
    return s;
}

double binomial_real(int n, int k)
{
    try {
        const auto b = exact_binomial(n, k);
        if (b < (std::uint64_t{1} << 53))
            return static_cast<double>(b);
    } catch (const InvalidArgument&) {
    }
    return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0));
}

NormEquivalence make_chain(double lower, double middle, double upper)
{
    NormEquivalence r;
    r.lower = lower;
    r.middle = middle;
    r.upper = upper;
    if (middle > 0.0) {
        r.lower_gap = (middle - lower) / middle;
        r.upper_gap = (upper - middle) / middle;
    }
    r.lower_ok = lower <= middle * (1.0 + kNormEquivalenceTolerance);
    r.upper_ok = middle <= upper * (1.0 + kNormEquivalenceTolerance);
    return r;
}

} // namespace

PolynomialRep::PolynomialRep(IndexSet ordering, Eigen::VectorXd coeffs)
    : ordering_(std::move(ordering)), coeffs_(std::move(coeffs))
{
    if (static_cast<std::size_t>(coeffs_.size()) != ordering_.size())
        throw InvalidArgument("coefficient vector length does not match the index set");
}

PolynomialRep PolynomialRep::zero(IndexSet ordering)
{
    const auto m = static_cast<Eigen::Index>(ordering.size());
    return PolynomialRep(std::move(ordering), Eigen::VectorXd::Zero(m));
}

PolynomialRep PolynomialRep::from_terms(IndexSet ordering, const std::vector<Term>& terms)
{
    PolynomialRep f = zero(std::move(ordering));
    for (const auto& [zeta, c] : terms) {
        const auto pos = f.ordering_.position(zeta);
        if (!pos) {
            if (f.params().homogeneous() && zeta.size() == static_cast<std::size_t>(f.params().d))
                throw InvalidArgument("homogeneous native space (a = 0) only holds monomials of degree p");
            throw InvalidArgument("monomial is outside the index set");
        }
        f.coeffs_(static_cast<Eigen::Index>(*pos)) += c;
    }
    return f;
}

PolynomialRep PolynomialRep::kernel_section(IndexSet ordering, std::span<const double> y)
{
    const KernelParams params = ordering.params();
    Eigen::VectorXd c = feature_map(y, params, ordering);
    c.array() *= coefficient_diagonal(ordering).array().sqrt();
    return PolynomialRep(std::move(ordering), std::move(c));
}

double PolynomialRep::coefficient(const MultiIndex& zeta) const
{
    const auto pos = ordering_.position(zeta);
    return pos ? coeffs_(static_cast<Eigen::Index>(*pos)) : 0.0;
}

std::vector<PolynomialRep::Term> PolynomialRep::terms() const
{
    std::vector<Term> out;
    for (std::size_t i = 0; i < ordering_.size(); ++i)
        if (coeffs_(static_cast<Eigen::Index>(i)) != 0.0)
            out.emplace_back(ordering_[i], coeffs_(static_cast<Eigen::Index>(i)));
    return out;
}

int PolynomialRep::degree() const
{
    int deg = -1;
    for (std::size_t i = 0; i < ordering_.size(); ++i)
        if (coeffs_(static_cast<Eigen::Index>(i)) != 0.0)
            deg = std::max(deg, ordering_[i].degree());
    return deg;
}

double PolynomialRep::operator()(std::span<const double> x) const
{
    CompensatedSum s;
    for (std::size_t i = 0; i < ordering_.size(); ++i) {
        const double c = coeffs_(static_cast<Eigen::Index>(i));
        if (c != 0.0)
            s.add(c * monomial(x, ordering_[i]));
    }
    return s.value();
}

PolynomialRep PolynomialRep::reindexed(const IndexSet& target) const
{
    std::vector<Term> t = terms();
    for (const auto& [zeta, c] : t)
        if (!target.contains(zeta))
            throw InvalidArgument("polynomial has a monomial outside the target index set");
    return from_terms(target, t);
}

double native_inner(const PolynomialRep& f, const PolynomialRep& g, const KernelParams& params)
{
    if (!(f.params() == params) || !(g.params() == params))
        throw InvalidArgument("polynomial ordering was built for different kernel parameters");
    if (f.ordering().indices() != g.ordering().indices())
        throw InvalidArgument("polynomials use different orderings");
    const auto& d = f.ordering().coefficients();
    CompensatedSum s;
    for (std::size_t i = 0; i < d.size(); ++i) {
        const auto k = static_cast<Eigen::Index>(i);
        s.add(f.coeffs()(k) * g.coeffs()(k) / d[i]);
    }
    return s.value();
}

double native_norm(const PolynomialRep& f, const KernelParams& params)
{
    return std::sqrt(std::max(0.0, native_inner(f, f, params)));
}

double native_norm_of_terms(const std::vector<PolynomialRep::Term>& terms, double a, int p)
{
    if (!std::isfinite(a) || a < 0.0 || p < 0)
        throw InvalidArgument("native norm needs a >= 0 and p >= 0");
    std::map<MultiIndex, double> merged;
    for (const auto& [zeta, c] : terms)
        merged[zeta] += c;
    CompensatedSum s;
    for (const auto& [zeta, c] : merged) {
        if (c == 0.0)
            continue;
        const int k = zeta.degree();
        if (k > p || (a == 0.0 && k != p))
            throw InvalidArgument("polynomial is not in the native space");
        s.add(c * c * std::exp(-log_d(zeta, a, p)));
    }
    return std::sqrt(std::max(0.0, s.value()));
}

NormEquivalence norm_equivalence_a(const PolynomialRep& f, double a, double a_prime, int p)
{
    if (!(a_prime > 0.0) || !(a_prime <= a) || !std::isfinite(a) || p < 1)
        throw InvalidArgument("norm equivalence in a needs 0 < a' <= a and p >= 1");
    if (f.degree() > p)
        throw InvalidArgument("polynomial degree exceeds p");
    const auto t = f.terms();
    const double na = native_norm_of_terms(t, a, p);
    const double nap = native_norm_of_terms(t, a_prime, p);
    return make_chain(std::pow(a_prime / a, 0.5 * p) * nap, na, nap);
}

NormEquivalence norm_equivalence_pq(const PolynomialRep& f, double a, int p, int q)
{
    if (!(a > 0.0) || !std::isfinite(a) || q < 0 || q > p)
        throw InvalidArgument("norm equivalence in p needs a > 0 and 0 <= q <= p");
    if (f.degree() > q)
        throw InvalidArgument("polynomial degree exceeds q");
    const auto t = f.terms();
    const double np = native_norm_of_terms(t, a, p);
    const double nq = native_norm_of_terms(t, a, q);
    const double scale = std::pow(a, 0.5 * (p - q));
    return make_chain(scale * np, nq, scale * std::sqrt(binomial_real(p, q)) * np);
}

namespace {

class FeatureProjector {
public:
    FeatureProjector(const PointSet& X, const KernelParams& params)
        : params_(params), idx_(enumerate_index_set(params))
    {
        if (!is_unisolvent(X, params).decision)
            throw NotUnisolvent("power function needs a unisolvent point set");
        const auto m = static_cast<Eigen::Index>(idx_.size());
        const auto n = static_cast<Eigen::Index>(X.size());
        // Phi(X)^T = D^{1/2} V^T; rows are already sorted by decreasing scale.
        const Eigen::MatrixXd phi = coefficient_diagonal(idx_).cwiseSqrt().asDiagonal()
                                    * vandermonde(X, idx_).transpose();
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(phi);
        Q_ = qr.householderQ() * Eigen::MatrixXd::Identity(m, n);
    }

    double distance(std::span<const double> x) const
    {
        const Eigen::VectorXd phi = feature_map(x, params_, idx_);
        Eigen::VectorXd r = phi - Q_ * (Q_.transpose() * phi);
        r -= Q_ * (Q_.transpose() * r);
        return r.norm();
    }

private:
    KernelParams params_;
    IndexSet idx_;
    Eigen::MatrixXd Q_;
};

} // namespace

double power_function(const PointSet& X, const KernelParams& params, std::span<const double> x)
{
    if (x.size() != static_cast<std::size_t>(params.d))
        throw InvalidArgument("point dimension does not match kernel dimension");
    return FeatureProjector(X, params).distance(x);
}

Eigen::VectorXd power_function(const PointSet& X, const KernelParams& params, const PointSet& grid)
{
    if (!grid.empty() && grid.dim() != params.d)
        throw InvalidArgument("grid dimension does not match kernel dimension");
    const FeatureProjector proj(X, params);
    Eigen::VectorXd out(static_cast<Eigen::Index>(grid.size()));
    for (std::size_t i = 0; i < grid.size(); ++i)
        out(static_cast<Eigen::Index>(i)) = proj.distance(grid.point(i));
    return out;
}

} // namespace polykernel
