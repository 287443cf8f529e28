#pragma once

#include <span>
#include <vector>

#include "mtmc/types.hpp"

namespace mtmc {

/// Intersection over union; 0 for disjoint boxes.
double iou(const BoundingBox& a, const BoundingBox& b);

/// Hard gate: +inf when x < k, 0 when x >= k.
double gate(double x, double k);

/// Greedy non-maximum suppression over detections of one camera and frame.
///
/// Detections are visited by descending confidence (ties broken by
/// lexicographic box coordinates); a detection is suppressed when its IoU
/// with an already kept one is strictly greater than `iou_threshold`.
std::vector<Detection> nms(std::span<const Detection> detections, double iou_threshold);

/// Keeps detections with confidence >= threshold, preserving order.
std::vector<Detection> confidence_filter(std::span<const Detection> detections, double threshold);

/// Confidence filter followed by per-(camera, frame) NMS. Output is sorted by
/// (camera, frame) and, within a frame, in NMS order.
std::vector<Detection> preprocess_detections(std::span<const Detection> detections,
                                             double confidence_threshold, double nms_iou_threshold);

}  // namespace mtmc
