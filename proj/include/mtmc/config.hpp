#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace mtmc {

using CameraPair = std::pair<int, int>;

/// Normalizes an unordered camera pair to (min, max).
inline CameraPair camera_pair(int a, int b) { return a < b ? CameraPair{a, b} : CameraPair{b, a}; }

/// Every threshold and constant used by the tracking pipeline.
struct PipelineConfig {
    // Linking weight offset; also the default stop threshold for
    // single-camera clustering.
    double s = 1.0;
    // Overrides `s` as the single-camera clustering stop threshold.
    std::optional<double> sct_threshold;

    double iou_gate = 0.5;
    int window_frames = 60;
    int neighbor_frames = 10;
    double speed_threshold = 15.0;  // pixels per frame
    double overlap_iou_threshold = 0.5;
    int smoothing_window = 5;
    // Live trajectories idle for more than this many frames before the
    // current window stop taking part in single-camera clustering; longer
    // gaps are bridged by the multi-camera stage instead.
    int sct_max_age_frames = 60;

    int rerank_k1 = 20;
    int rerank_k2 = 6;
    double rerank_lambda = 0.3;
    double mct_merge_threshold = 0.35;
    int max_gap_frames = 3600;
    std::set<CameraPair> overlapping_camera_pairs{{2, 8}, {3, 5}, {5, 7}};
    double fps = 60.0;

    double detection_confidence_threshold = 0.9;
    double nms_iou_threshold = 0.3;
    bool normalize_features = false;

    double sct_stop_threshold() const { return sct_threshold.value_or(s); }
    bool cameras_overlap(int a, int b) const {
        return overlapping_camera_pairs.count(camera_pair(a, b)) > 0;
    }

    friend bool operator==(const PipelineConfig&, const PipelineConfig&) = default;
};

struct ConfigViolation {
    std::string field;
    std::string message;
};

/// Empty iff every config invariant holds.
std::vector<ConfigViolation> validate_config(const PipelineConfig& config);

}  // namespace mtmc
