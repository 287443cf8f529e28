#include "mtmc/geometry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace mtmc {

double iou(const BoundingBox& a, const BoundingBox& b) {
    const double iw = std::max(0.0, std::min(a.right, b.right) - std::max(a.left, b.left));
    const double ih = std::max(0.0, std::min(a.bottom, b.bottom) - std::max(a.top, b.top));
    const double inter = iw * ih;
    if (inter <= 0.0) {
        return 0.0;
    }
    const double uni = a.area() + b.area() - inter;
    return std::clamp(inter / uni, 0.0, 1.0);
}

double gate(double x, double k) { return x < k ? kInf : 0.0; }

std::vector<Detection> nms(std::span<const Detection> detections, double iou_threshold) {
    std::vector<std::size_t> order(detections.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        const auto& a = detections[i];
        const auto& b = detections[j];
        if (a.confidence != b.confidence) {
            return a.confidence > b.confidence;
        }
        return std::tie(a.box.left, a.box.top, a.box.right, a.box.bottom) <
               std::tie(b.box.left, b.box.top, b.box.right, b.box.bottom);
    });

    std::vector<Detection> kept;
    for (std::size_t idx : order) {
        const auto& candidate = detections[idx];
        const bool suppressed = std::any_of(kept.begin(), kept.end(), [&](const Detection& k) {
            return iou(k.box, candidate.box) > iou_threshold;
        });
        if (!suppressed) {
            kept.push_back(candidate);
        }
    }
    return kept;
}

std::vector<Detection> confidence_filter(std::span<const Detection> detections, double threshold) {
    std::vector<Detection> out;
    std::copy_if(detections.begin(), detections.end(), std::back_inserter(out),
                 [threshold](const Detection& d) { return d.confidence >= threshold; });
    return out;
}

std::vector<Detection> preprocess_detections(std::span<const Detection> detections,
                                             double confidence_threshold, double nms_iou_threshold) {
    std::map<std::pair<int, int>, std::vector<Detection>> per_frame;
    for (auto& d : confidence_filter(detections, confidence_threshold)) {
        per_frame[{d.camera, d.frame}].push_back(std::move(d));
    }
    std::vector<Detection> out;
    for (const auto& [key, group] : per_frame) {
        auto kept = nms(group, nms_iou_threshold);
        std::move(kept.begin(), kept.end(), std::back_inserter(out));
    }
    return out;
}

}  // namespace mtmc
