#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mtmc {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Axis-aligned box in image coordinates (y grows downward).
struct BoundingBox {
    double left = 0.0;
    double top = 0.0;
    double right = 0.0;
    double bottom = 0.0;

    double width() const { return right - left; }
    double height() const { return bottom - top; }
    double area() const { return width() * height(); }
    double center_x() const { return 0.5 * (left + right); }
    double center_y() const { return 0.5 * (top + bottom); }

    /// Finite coordinates and strictly positive area.
    bool valid() const;

    friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

/// Throws ValidationError unless the box is valid.
BoundingBox make_box(double left, double top, double right, double bottom);

using FeatureVector = std::vector<double>;

struct Detection {
    int camera = 0;
    int frame = 0;
    BoundingBox box;
    double confidence = 1.0;
    FeatureVector feature;

    friend bool operator==(const Detection&, const Detection&) = default;
};

/// One frame of a trajectory. Interpolated points never carry a feature.
struct TrackPoint {
    int frame = 0;
    BoundingBox box;
    std::optional<FeatureVector> feature;
    bool interpolated = false;
    // Index of the detection this point was built from, when known.
    std::optional<std::size_t> source;

    friend bool operator==(const TrackPoint&, const TrackPoint&) = default;
};

/// Single-camera, frame-ordered sequence of boxes.
///
/// Construction enforces strictly increasing frames, valid boxes, at least
/// one non-interpolated point, and no feature on interpolated points.
class Trajectory {
public:
    Trajectory(int camera, std::vector<TrackPoint> points);

    int camera() const { return camera_; }
    const std::vector<TrackPoint>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    int first_frame() const { return points_.front().frame; }
    int last_frame() const { return points_.back().frame; }

    /// Point at `frame`, or nullptr.
    const TrackPoint* at(int frame) const;

    bool contiguous() const {
        return static_cast<std::size_t>(last_frame() - first_frame() + 1) == points_.size();
    }

    /// Number of points that carry a feature.
    std::size_t feature_count() const;

    friend bool operator==(const Trajectory&, const Trajectory&) = default;

private:
    int camera_;
    std::vector<TrackPoint> points_;
};

/// Short trajectory built by adjacent-frame linking inside one window.
using Tracklet = Trajectory;

struct IdentityCluster {
    int identity = 0;
    std::vector<Trajectory> members;

    friend bool operator==(const IdentityCluster&, const IdentityCluster&) = default;
};

/// Dense row-major matrix of extended reals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

double l2_distance(const FeatureVector& a, const FeatureVector& b);

}  // namespace mtmc
