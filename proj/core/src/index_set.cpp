#include "polykernel/index_set.hpp"

#include "polykernel/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

namespace polykernel {

namespace {

// Relative gap below which two coefficients count as tied in the ordering.
// Log-gamma evaluation leaves mathematically equal values a few ulps apart.
constexpr double kTieTolerance = 1e-12;

void check_params(double a, int p, int d)
{
    if (!std::isfinite(a) || a < 0.0)
        throw InvalidArgument("kernel parameter a must be finite and non-negative");
    if (p < 1)
        throw InvalidArgument("kernel degree p must be at least 1");
    if (d < 1)
        throw InvalidArgument("dimension d must be at least 1");
}

// log d_zeta. The lgamma terms of zeta are added in descending exponent order
// so that permutations of zeta give bitwise identical results.
double log_coefficient(const MultiIndex& zeta, const KernelParams& params)
{
    const int k = zeta.degree();
    double s = std::lgamma(params.p + 1.0);
    if (!params.homogeneous()) {
        s -= std::lgamma(params.p - k + 1.0);
        if (params.p > k)
            s += (params.p - k) * std::log(params.a);
    }
    return s - zeta.log_factorial();
}

void append_degree(int d, int deg, std::vector<MultiIndex>& out)
{
    std::vector<int> cur(d, 0);
    // Fill coordinates left to right, largest leading exponent first.
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == d - 1) {
            cur[pos] = left;
            out.emplace_back(cur);
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[pos] = e;
            rec(pos + 1, left - e);
        }
    };
    rec(0, deg);
}

void require_member(const MultiIndex& zeta, const KernelParams& params)
{
    if (!in_index_set(zeta, params))
        throw InvalidArgument("multiindex is outside the index set I_a(p,d)");
}

} // namespace

KernelParams::KernelParams(double a_, int p_, int d_)
    : a(a_), p(p_), d(d_)
{
    check_params(a, p, d);
}

MultiIndex::MultiIndex(std::vector<int> exponents)
    : exps_(std::move(exponents))
{
    for (int e : exps_)
        if (e < 0)
            throw InvalidArgument("multiindex exponents must be non-negative");
}

MultiIndex::MultiIndex(std::initializer_list<int> exponents)
    : MultiIndex(std::vector<int>(exponents))
{
}

int MultiIndex::degree() const
{
    return std::accumulate(exps_.begin(), exps_.end(), 0);
}

double MultiIndex::log_factorial() const
{
    std::vector<int> sorted = exps_;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    double s = 0.0;
    for (int e : sorted)
        if (e > 1)
            s += std::lgamma(e + 1.0);
    return s;
}

bool graded_lex_less(const MultiIndex& lhs, const MultiIndex& rhs)
{
    const int dl = lhs.degree();
    const int dr = rhs.degree();
    if (dl != dr)
        return dl < dr;
    return lhs.exponents() > rhs.exponents();
}

bool in_index_set(const MultiIndex& zeta, const KernelParams& params)
{
    if (zeta.size() != static_cast<std::size_t>(params.d))
        return false;
    const int k = zeta.degree();
    return params.homogeneous() ? k == params.p : k <= params.p;
}

double coefficient_d(const MultiIndex& zeta, const KernelParams& params)
{
    require_member(zeta, params);
    return std::exp(log_coefficient(zeta, params));
}

double weight_w(const MultiIndex& zeta, const KernelParams& params)
{
    require_member(zeta, params);
    const double f = std::exp(zeta.log_factorial());
    return f * f * coefficient_d(zeta, params);
}

std::uint64_t exact_factorial(int n)
{
    if (n < 0 || n > 20)
        throw InvalidArgument("exact_factorial supports 0 <= n <= 20");
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i)
        r *= static_cast<std::uint64_t>(i);
    return r;
}

std::uint64_t exact_binomial(int n, int k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        // r * (n-k+i) / i is exact at every step
        const std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
        if (r > std::numeric_limits<std::uint64_t>::max() / num)
            throw InvalidArgument("binomial coefficient overflows 64 bits");
        r = r * num / static_cast<std::uint64_t>(i);
    }
    return r;
}

std::size_t index_set_size(const KernelParams& params)
{
    const int p = params.p, d = params.d;
    return params.homogeneous() ? exact_binomial(d + p - 1, d - 1) : exact_binomial(d + p, d);
}

IndexSet enumerate_index_set(const KernelParams& params)
{
    check_params(params.a, params.p, params.d);

    std::vector<MultiIndex> graded;
    graded.reserve(index_set_size(params));
    const int lo = params.homogeneous() ? params.p : 0;
    for (int deg = lo; deg <= params.p; ++deg)
        append_degree(params.d, deg, graded);

    std::vector<double> logs(graded.size());
    for (std::size_t i = 0; i < graded.size(); ++i)
        logs[i] = log_coefficient(graded[i], params);

    // Sort by log d descending (graded position as secondary key), then
    // regroup runs of numerically tied values and order each run graded-lex.
    std::vector<std::size_t> order(graded.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return logs[i] > logs[j]; });
    for (std::size_t start = 0; start < order.size();) {
        std::size_t stop = start + 1;
        const double lead = logs[order[start]];
        while (stop < order.size()
               && lead - logs[order[stop]] <= kTieTolerance * std::max(1.0, std::abs(lead)))
            ++stop;
        std::sort(order.begin() + start, order.begin() + stop);
        start = stop;
    }

    IndexSet set;
    set.params_ = params;
    set.indices_.reserve(order.size());
    set.coeffs_.reserve(order.size());
    for (std::size_t i : order) {
        set.lookup_.emplace(graded[i], set.indices_.size());
        set.indices_.push_back(graded[i]);
        set.coeffs_.push_back(std::exp(logs[i]));
    }
    return set;
}

std::vector<double> IndexSet::weights() const
{
    std::vector<double> w(indices_.size());
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        const double f = std::exp(indices_[i].log_factorial());
        w[i] = f * f * coeffs_[i];
    }
    return w;
}

std::optional<std::size_t> IndexSet::position(const MultiIndex& zeta) const
{
    auto it = lookup_.find(zeta);
    if (it == lookup_.end())
        return std::nullopt;
    return it->second;
}

IndexSet IndexSet::permuted(const std::vector<std::size_t>& perm) const
{
    if (perm.size() != indices_.size())
        throw InvalidArgument("permutation length does not match the index set");
    std::vector<bool> seen(perm.size(), false);
    IndexSet out;
    out.params_ = params_;
    out.indices_.reserve(perm.size());
    out.coeffs_.reserve(perm.size());
    for (std::size_t k : perm) {
        if (k >= perm.size() || seen[k])
            throw InvalidArgument("not a permutation");
        seen[k] = true;
        out.lookup_.emplace(indices_[k], out.indices_.size());
        out.indices_.push_back(indices_[k]);
        out.coeffs_.push_back(coeffs_[k]);
    }
    return out;
}

} // namespace polykernel
