#pragma once

#include <cmath>

// Error-free transformations and compensated accumulation in binary64.
namespace polykernel::detail {

struct Pair {
    double hi;
    double lo;
};

/// a + b = s + e exactly.
inline Pair two_sum(double a, double b)
{
    const double s = a + b;
    const double z = s - a;
    return {s, (a - (s - z)) + (b - z)};
}

/// a * b = p + e exactly (barring underflow).
inline Pair two_prod(double a, double b)
{
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

/// Sum of products accumulated in roughly twice the working precision.
class Dot2 {
public:
    void add_product(double a, double b)
    {
        const Pair pr = two_prod(a, b);
        const Pair s = two_sum(hi_, pr.hi);
        hi_ = s.hi;
        lo_ += s.lo + pr.lo;
    }
    void add(double v)
    {
        const Pair s = two_sum(hi_, v);
        hi_ = s.hi;
        lo_ += s.lo;
    }
    double value() const { return hi_ + lo_; }
    /// Unevaluated pair (hi, lo) with hi = fl(hi + lo).
    Pair pair() const
    {
        const double h = hi_ + lo_;
        return {h, lo_ - (h - hi_)};
    }

private:
    double hi_ = 0.0;
    double lo_ = 0.0;
};

/// Neumaier's variant of Kahan summation.
class CompensatedSum {
public:
    void add(double v)
    {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

} // namespace polykernel::detail
