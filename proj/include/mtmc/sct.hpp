#pragma once

#include <span>
#include <vector>

#include "mtmc/assignment.hpp"
#include "mtmc/config.hpp"
#include "mtmc/types.hpp"

// Single-camera, near-online tracking: adjacent-frame linking into tracklets,
// agglomerative clustering of tracklets into trajectories, then interpolation
// and smoothing.
namespace mtmc::sct {

/// Linking weight between detections on adjacent frames:
/// s - ||f_a - f_b|| - gate(iou, iou_gate). Returns -inf when the IoU gate fails.
double pairwise_weight(const Detection& a, const Detection& b, const PipelineConfig& config);

/// Matches detections of frame t (rows) to detections of frame t+1 (cols).
Matching link_adjacent_frames(std::span<const Detection> frame_t, std::span<const Detection> frame_t1,
                              const PipelineConfig& config);

/// Chains adjacent-frame matches inside one window into tracklets.
///
/// Detections that link to nothing in either direction are false alarms and
/// are dropped. `TrackPoint::source` holds `first_source + i` for input index i.
std::vector<Tracklet> build_tracklets(std::span<const Detection> window, const PipelineConfig& config,
                                      std::size_t first_source = 0);

/// Endpoint frames used to compare two trajectories.
struct Endpoints {
    int t_i = 0;  // last frame of the earlier-ending trajectory
    int t_u = 0;  // first frame of the other trajectory at or after t_i
    bool a_ends_first = true;
};

/// Picks (t_i, t_u) so that the result does not depend on argument order.
Endpoints endpoints(const Trajectory& a, const Trajectory& b);

/// L2 distance between endpoint-averaged features. Throws ValidationError if
/// either input carries no features.
double appearance_distance(const Trajectory& a, const Trajectory& b, const PipelineConfig& config);

/// 0 when the implied speed between the endpoint boxes is below the speed
/// threshold (or the endpoints coincide), +inf otherwise.
double separation_distance(const Trajectory& a, const Trajectory& b, const PipelineConfig& config);

/// 0 when the mean IoU over co-covered frames is >= the overlap threshold or
/// there are no common frames, +inf otherwise.
double overlap_distance(const Trajectory& a, const Trajectory& b, const PipelineConfig& config);

struct SctDistance {
    double appearance = 0.0;
    double separation = 0.0;
    double overlap = 0.0;
    double total() const { return appearance + separation + overlap; }
};

SctDistance sct_distance_parts(const Trajectory& a, const Trajectory& b, const PipelineConfig& config);
double sct_distance(const Trajectory& a, const Trajectory& b, const PipelineConfig& config);

/// Concatenates two trajectories of one camera by frame. On frame collisions
/// the point of the earlier-starting input wins (`a` on equal starts).
Trajectory concatenate(const Trajectory& a, const Trajectory& b);

/// Agglomerative clustering: merges the closest pair until the minimum
/// distance exceeds the stop threshold. Merged items keep the lower index.
std::vector<Trajectory> cluster_tracklets(std::vector<Trajectory> items, const PipelineConfig& config);

/// Fills frame gaps by linear interpolation (no features on filled points),
/// then applies a centered moving average of `smoothing_window` frames,
/// truncated at the ends, to every box coordinate.
Trajectory interpolate_and_smooth(const Trajectory& trajectory, const PipelineConfig& config);

/// Windowed near-online tracking of one camera. Detections must already be
/// preprocessed. `TrackPoint::source` refers to indices into `detections`.
/// A trajectory whose last frame lies more than `sct_max_age_frames` before
/// the current window is final and no longer clustered.
std::vector<Trajectory> track_camera(std::span<const Detection> detections, const PipelineConfig& config);

}  // namespace mtmc::sct
