#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <span>
#include <vector>

namespace polykernel {

/// N x d coordinates, one point per row.
using PointMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Distance (max-norm) below which two points are treated as duplicates.
inline constexpr double kNearDuplicateDistance = 1e-12;

class PointSet {
public:
    PointSet() = default;
    /// Empty set of dimension d.
    explicit PointSet(int d);
    explicit PointSet(PointMatrix coords);
    /// One-dimensional points.
    static PointSet from_1d(const std::vector<double>& xs);
    static PointSet from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t size() const { return static_cast<std::size_t>(coords_.rows()); }
    int dim() const { return static_cast<int>(coords_.cols()); }
    bool empty() const { return coords_.rows() == 0; }

    const PointMatrix& coords() const { return coords_; }
    std::span<const double> point(std::size_t i) const
    {
        return {coords_.data() + i * coords_.cols(), static_cast<std::size_t>(coords_.cols())};
    }

    /// Some pair of rows compares exactly equal.
    bool has_duplicates() const { return has_duplicates_; }
    /// Some pair of distinct rows is closer than kNearDuplicateDistance.
    bool has_near_duplicates() const { return has_near_duplicates_; }
    bool pairwise_distinct() const { return !has_duplicates_ && !has_near_duplicates_; }

    /// Rows of this set followed by rows of other.
    PointSet concatenated(const PointSet& other) const;

private:
    void scan();

    PointMatrix coords_;
    bool has_duplicates_ = false;
    bool has_near_duplicates_ = false;
};

} // namespace polykernel
