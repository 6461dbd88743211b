#pragma once

#include "polykernel/index_set.hpp"
#include "polykernel/point_set.hpp"

#include <Eigen/Dense>

#include <span>
#include <utility>
#include <vector>

namespace polykernel {

/// Polynomial sum_zeta c_zeta x^zeta over the monomials of an index set.
class PolynomialRep {
public:
    using Term = std::pair<MultiIndex, double>;

    PolynomialRep() = default;
    PolynomialRep(IndexSet ordering, Eigen::VectorXd coeffs);

    static PolynomialRep zero(IndexSet ordering);
    /// Throws InvalidArgument if a term lies outside the index set; for a = 0
    /// this rejects every term whose degree is not p.
    static PolynomialRep from_terms(IndexSet ordering, const std::vector<Term>& terms);
    /// The kernel section k(., y) = sum_zeta d_zeta y^zeta x^zeta.
    static PolynomialRep kernel_section(IndexSet ordering, std::span<const double> y);

    const IndexSet& ordering() const { return ordering_; }
    const Eigen::VectorXd& coeffs() const { return coeffs_; }
    const KernelParams& params() const { return ordering_.params(); }

    /// Coefficient of x^zeta, zero for monomials outside the index set.
    double coefficient(const MultiIndex& zeta) const;
    std::vector<Term> terms() const;
    /// Highest degree with a nonzero coefficient, -1 for the zero polynomial.
    int degree() const;

    double operator()(std::span<const double> x) const;

    /// Same polynomial over another index set. Throws if a nonzero coefficient has no slot there.
    PolynomialRep reindexed(const IndexSet& target) const;

private:
    IndexSet ordering_;
    Eigen::VectorXd coeffs_;
};

/// sum_gamma c_gamma^f c_gamma^g / d_gamma with compensated summation.
/// Throws InvalidArgument unless f and g share the ordering built from params.
double native_inner(const PolynomialRep& f, const PolynomialRep& g, const KernelParams& params);
double native_norm(const PolynomialRep& f, const KernelParams& params);

/// Native norm of a polynomial given by terms, for any p >= 0 (p = 0 is the constants).
double native_norm_of_terms(const std::vector<PolynomialRep::Term>& terms, double a, int p);

inline constexpr double kNormEquivalenceTolerance = 1e-10;

/// One inequality chain lower <= middle <= upper evaluated for a given f.
struct NormEquivalence {
    double lower = 0.0;
    double middle = 0.0;
    double upper = 0.0;
    /// (middle - lower) / middle and (upper - middle) / middle; zero at equality.
    double lower_gap = 0.0;
    double upper_gap = 0.0;
    bool lower_ok = false;
    bool upper_ok = false;
};

/// (a'/a)^{p/2} ||f||_{a',p} <= ||f||_{a,p} <= ||f||_{a',p} for 0 < a' <= a.
NormEquivalence norm_equivalence_a(const PolynomialRep& f, double a, double a_prime, int p);

/// a^{(p-q)/2} ||f||_{a,p} <= ||f||_{a,q} <= a^{(p-q)/2} binom(p,q)^{1/2} ||f||_{a,p}
/// for f of degree at most q, a > 0, 0 <= q <= p.
NormEquivalence norm_equivalence_pq(const PolynomialRep& f, double a, int p, int q);

/// P(x) = sup over the unit ball of H_{a,p} of |f(x) - I f(x)|, computed as the
/// distance from the feature vector Phi(x) to span{Phi(x_i)}.
/// Throws NotUnisolvent if X is not unisolvent.
double power_function(const PointSet& X, const KernelParams& params, std::span<const double> x);
Eigen::VectorXd power_function(const PointSet& X, const KernelParams& params, const PointSet& grid);

} // namespace polykernel
