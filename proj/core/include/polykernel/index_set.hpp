#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <vector>

namespace polykernel {

/// Parameters (a, p, d) of the kernel (a + <x,y>)^p on R^d.
struct KernelParams {
    double a = 1.0;
    int p = 1;
    int d = 1;

    KernelParams() = default;
    /// Throws InvalidArgument unless a >= 0 (finite), p >= 1, d >= 1.
    KernelParams(double a, int p, int d);

    bool homogeneous() const { return a == 0.0; }

    friend bool operator==(const KernelParams&, const KernelParams&) = default;
};

class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> exponents);
    MultiIndex(std::initializer_list<int> exponents);

    std::size_t size() const { return exps_.size(); }
    int operator[](std::size_t i) const { return exps_[i]; }
    const std::vector<int>& exponents() const { return exps_; }

    /// |zeta|
    int degree() const;
    /// log(zeta!)
    double log_factorial() const;

    friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

private:
    std::vector<int> exps_;
};

/// Graded lexicographic order: lower degree first, then larger leading exponents first.
bool graded_lex_less(const MultiIndex& lhs, const MultiIndex& rhs);

/// Ordered multiindex set I_a(p,d) together with its kernel coefficients.
class IndexSet {
public:
    IndexSet() = default;

    const KernelParams& params() const { return params_; }
    std::size_t size() const { return indices_.size(); }
    const MultiIndex& operator[](std::size_t i) const { return indices_[i]; }
    const std::vector<MultiIndex>& indices() const { return indices_; }
    auto begin() const { return indices_.begin(); }
    auto end() const { return indices_.end(); }

    /// d_zeta for each index, in set order (non-increasing).
    const std::vector<double>& coefficients() const { return coeffs_; }
    std::vector<double> weights() const;

    /// Position of zeta in the ordering, or nullopt if zeta is not a member.
    std::optional<std::size_t> position(const MultiIndex& zeta) const;
    bool contains(const MultiIndex& zeta) const { return position(zeta).has_value(); }

    /// Same membership as this set, reordered (used for solver column selection).
    IndexSet permuted(const std::vector<std::size_t>& perm) const;

    friend IndexSet enumerate_index_set(const KernelParams& params);

private:
    KernelParams params_;
    std::vector<MultiIndex> indices_;
    std::vector<double> coeffs_;
    std::map<MultiIndex, std::size_t> lookup_;
};

/// All zeta in N_0^d with |zeta| <= p (a > 0) or |zeta| = p (a = 0), sorted by
/// non-increasing d_zeta with graded-lex tie-break.
IndexSet enumerate_index_set(const KernelParams& params);

/// M_a computed from the binomial formula.
std::size_t index_set_size(const KernelParams& params);

bool in_index_set(const MultiIndex& zeta, const KernelParams& params);

/// p! a^(p-|zeta|) / ((p-|zeta|)! zeta!), or p!/zeta! when a = 0.
double coefficient_d(const MultiIndex& zeta, const KernelParams& params);

/// (zeta!)^2 d_zeta.
double weight_w(const MultiIndex& zeta, const KernelParams& params);

/// Exact n! for n <= 20.
std::uint64_t exact_factorial(int n);

/// Exact binomial coefficient; throws on overflow.
std::uint64_t exact_binomial(int n, int k);

} // namespace polykernel
