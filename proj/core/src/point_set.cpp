#include "polykernel/point_set.hpp"

#include "polykernel/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace polykernel {

PointSet::PointSet(int d)
    : coords_(0, d)
{
    if (d < 1)
        throw InvalidArgument("point dimension must be at least 1");
}

PointSet::PointSet(PointMatrix coords)
    : coords_(std::move(coords))
{
    if (coords_.cols() < 1)
        throw InvalidArgument("point dimension must be at least 1");
    if (!coords_.allFinite())
        throw InvalidArgument("point coordinates must be finite");
    scan();
}

PointSet PointSet::from_1d(const std::vector<double>& xs)
{
    PointMatrix m(static_cast<Eigen::Index>(xs.size()), 1);
    for (std::size_t i = 0; i < xs.size(); ++i)
        m(static_cast<Eigen::Index>(i), 0) = xs[i];
    return PointSet(std::move(m));
}

PointSet PointSet::from_rows(const std::vector<std::vector<double>>& rows)
{
    if (rows.empty())
        throw InvalidArgument("from_rows needs at least one row to fix the dimension");
    const std::size_t d = rows.front().size();
    PointMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(d));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != d)
            throw InvalidArgument("rows have inconsistent dimension");
        for (std::size_t j = 0; j < d; ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    }
    return PointSet(std::move(m));
}

PointSet PointSet::concatenated(const PointSet& other) const
{
    if (other.dim() != dim())
        throw InvalidArgument("cannot concatenate point sets of different dimension");
    PointMatrix m(coords_.rows() + other.coords_.rows(), coords_.cols());
    m.topRows(coords_.rows()) = coords_;
    m.bottomRows(other.coords_.rows()) = other.coords_;
    return PointSet(std::move(m));
}

void PointSet::scan()
{
    has_duplicates_ = false;
    has_near_duplicates_ = false;
    const Eigen::Index n = coords_.rows();
    if (n < 2)
        return;

    // Sweep in order of the first coordinate; only rows within the tolerance
    // window on that coordinate can be near each other in max-norm.
    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::sort(order.begin(), order.end(),
              [&](Eigen::Index i, Eigen::Index j) { return coords_(i, 0) < coords_(j, 0); });
    for (std::size_t s = 0; s < order.size(); ++s) {
        const auto ri = coords_.row(order[s]);
        for (std::size_t t = s + 1; t < order.size(); ++t) {
            const auto rj = coords_.row(order[t]);
            if (rj(0) - ri(0) >= kNearDuplicateDistance)
                break;
            const double dist = (ri - rj).cwiseAbs().maxCoeff();
            if (dist == 0.0)
                has_duplicates_ = true;
            else if (dist < kNearDuplicateDistance)
                has_near_duplicates_ = true;
        }
    }
}

} // namespace polykernel
