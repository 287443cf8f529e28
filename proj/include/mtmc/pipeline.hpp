#pragma once

#include <map>
#include <span>
#include <vector>

#include "mtmc/config.hpp"
#include "mtmc/mct.hpp"
#include "mtmc/types.hpp"

namespace mtmc {

struct PipelineResult {
    // Single-camera trajectories, concatenated in camera-id order.
    std::vector<Trajectory> trajectories;
    std::map<int, std::size_t> trajectories_per_camera;
    // Final identities; with sct_only every trajectory is its own identity.
    std::vector<IdentityCluster> identities;
    std::vector<mct::MergeEvent> merges;
};

/// Pairs detections with feature rows by position. Throws ValidationError on
/// count or dimension mismatch.
void attach_features(std::vector<Detection>& detections, std::vector<FeatureVector> features);

/// Scales every feature to unit L2 norm (zero vectors are left unchanged).
void normalize_features(std::vector<Detection>& detections);

/// Runs single-camera tracking per camera on up to `jobs` worker threads,
/// then cross-camera association unless `sct_only`. Output does not depend
/// on `jobs`. Detections must already be preprocessed. `TrackPoint::source`
/// in the result indexes `detections`.
PipelineResult run_pipeline(std::span<const Detection> detections, const PipelineConfig& config, bool sct_only = false,
                            unsigned jobs = 1);

}  // namespace mtmc
