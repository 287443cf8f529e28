#include "mtmc/config.hpp"

#include <cmath>

namespace mtmc {

namespace {

void require_positive(std::vector<ConfigViolation>& out, const char* field, double value) {
    if (!std::isfinite(value) || value <= 0.0) {
        out.push_back({field, "must be finite and > 0"});
    }
}

void require_unit(std::vector<ConfigViolation>& out, const char* field, double value) {
    if (!std::isfinite(value) || value < 0.0 || value > 1.0) {
        out.push_back({field, "must lie in [0, 1]"});
    }
}

}  // namespace

std::vector<ConfigViolation> validate_config(const PipelineConfig& c) {
    std::vector<ConfigViolation> out;
    require_positive(out, "s", c.s);
    if (c.sct_threshold) {
        require_positive(out, "sct_threshold", *c.sct_threshold);
    }
    require_unit(out, "iou_gate", c.iou_gate);
    if (c.window_frames < 1) out.push_back({"window_frames", "must be >= 1"});
    if (c.neighbor_frames < 1) out.push_back({"neighbor_frames", "must be >= 1"});
    require_positive(out, "speed_threshold", c.speed_threshold);
    require_unit(out, "overlap_iou_threshold", c.overlap_iou_threshold);
    if (c.smoothing_window < 1 || c.smoothing_window % 2 == 0) {
        out.push_back({"smoothing_window", "must be a positive odd integer"});
    }
    if (c.sct_max_age_frames < 0) out.push_back({"sct_max_age_frames", "must be >= 0"});
    if (c.rerank_k1 < 1) out.push_back({"rerank_k1", "must be >= 1"});
    if (c.rerank_k2 < 1) out.push_back({"rerank_k2", "must be >= 1"});
    require_unit(out, "rerank_lambda", c.rerank_lambda);
    require_positive(out, "mct_merge_threshold", c.mct_merge_threshold);
    if (c.max_gap_frames < 1) out.push_back({"max_gap_frames", "must be >= 1"});
    for (const auto& [a, b] : c.overlapping_camera_pairs) {
        if (a < 1 || b < 1 || a >= b) {
            out.push_back({"overlapping_camera_pairs",
                           "pair (" + std::to_string(a) + "," + std::to_string(b) +
                               ") must name two distinct positive cameras"});
        }
    }
    require_positive(out, "fps", c.fps);
    require_unit(out, "detection_confidence_threshold", c.detection_confidence_threshold);
    require_unit(out, "nms_iou_threshold", c.nms_iou_threshold);
    return out;
}

}  // namespace mtmc
