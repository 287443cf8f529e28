#include "mtmc/types.hpp"

#include <algorithm>
#include <cmath>

namespace mtmc {

bool BoundingBox::valid() const {
    return std::isfinite(left) && std::isfinite(top) && std::isfinite(right) &&
           std::isfinite(bottom) && left < right && top < bottom;
}

BoundingBox make_box(double left, double top, double right, double bottom) {
    BoundingBox box{left, top, right, bottom};
    if (!box.valid()) {
        throw ValidationError("invalid bounding box (" + std::to_string(left) + ", " +
                              std::to_string(top) + ", " + std::to_string(right) + ", " +
                              std::to_string(bottom) + ")");
    }
    return box;
}

Trajectory::Trajectory(int camera, std::vector<TrackPoint> points)
    : camera_(camera), points_(std::move(points)) {
    if (points_.empty()) {
        throw ValidationError("trajectory has no points");
    }
    bool any_observed = false;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        const auto& p = points_[i];
        if (i > 0 && p.frame <= points_[i - 1].frame) {
            throw ValidationError("trajectory frames not strictly increasing at frame " +
                                  std::to_string(p.frame));
        }
        if (!p.box.valid()) {
            throw ValidationError("trajectory has invalid box at frame " + std::to_string(p.frame));
        }
        if (p.interpolated && p.feature) {
            throw ValidationError("interpolated point carries a feature at frame " +
                                  std::to_string(p.frame));
        }
        any_observed = any_observed || !p.interpolated;
    }
    if (!any_observed) {
        throw ValidationError("trajectory has only interpolated points");
    }
}

const TrackPoint* Trajectory::at(int frame) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), frame,
                               [](const TrackPoint& p, int f) { return p.frame < f; });
    if (it == points_.end() || it->frame != frame) {
        return nullptr;
    }
    return &*it;
}

std::size_t Trajectory::feature_count() const {
    return static_cast<std::size_t>(
        std::count_if(points_.begin(), points_.end(), [](const TrackPoint& p) { return p.feature.has_value(); }));
}

double l2_distance(const FeatureVector& a, const FeatureVector& b) {
    if (a.size() != b.size()) {
        throw ValidationError("feature dimension mismatch: " + std::to_string(a.size()) + " vs " +
                              std::to_string(b.size()));
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double diff = a[i] - b[i];
        sum += diff * diff;
    }
    return std::sqrt(sum);
}

}  // namespace mtmc
