#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mtmc/config.hpp"
#include "mtmc/types.hpp"

// Multi-camera association: per-trajectory mean features, Euclidean
// distances, k-reciprocal re-ranking and greedy constrained merging.
namespace mtmc::mct {

struct TrajectoryDescriptor {
    std::size_t index = 0;  // position in the input trajectory list
    FeatureVector mean_feature;
    int camera = 0;
    int first_frame = 0;
    int last_frame = 0;
};

/// Componentwise mean over points that carry a feature. Throws
/// ValidationError when there are none.
FeatureVector mean_feature(const Trajectory& trajectory);

std::vector<TrajectoryDescriptor> describe(std::span<const Trajectory> trajectories);

/// Pairwise L2 distances between mean features; symmetric, zero diagonal.
Matrix euclidean_matrix(std::span<const TrajectoryDescriptor> descriptors);

/// k-reciprocal re-ranking of a symmetric distance matrix.
///
/// Neighbor ranks and encoding weights use the squared distances divided by
/// the row maximum; the final blend is lambda * d + (1 - lambda) * Jaccard on
/// the raw input, symmetrized with its transpose and with a zero diagonal.
/// k1 and k2 are clamped to n - 1. Throws ValidationError on non-square input
/// or negative entries.
Matrix k_reciprocal_rerank(const Matrix& d, int k1, int k2, double lambda);

/// Merge test for two disjoint clusters, triggered by the trajectory pair
/// (`trigger_a` in `a`, `trigger_b` in `b`).
///
/// The trigger pair must be separated by fewer than max_gap_frames, and no
/// two members of the union may co-occur in time unless they sit in an
/// overlapping camera pair (same-camera co-occurrence is always rejected).
bool compatible(std::span<const Trajectory* const> a, std::span<const Trajectory* const> b,
                const Trajectory& trigger_a, const Trajectory& trigger_b, const PipelineConfig& config);

bool compatible(const IdentityCluster& a, const IdentityCluster& b, const Trajectory& trigger_a,
                const Trajectory& trigger_b, const PipelineConfig& config);

/// Frames strictly between two trajectories; <= 0 when they overlap in time.
int temporal_gap(const Trajectory& a, const Trajectory& b);
bool overlap_in_time(const Trajectory& a, const Trajectory& b);

struct MergeEvent {
    std::size_t first = 0;  // trajectory indices of the triggering pair
    std::size_t second = 0;
    double distance = 0.0;
};

struct Association {
    std::vector<IdentityCluster> clusters;
    // Cluster position (into `clusters`) of every input trajectory.
    std::vector<std::size_t> cluster_of;
    std::vector<MergeEvent> merges;
};

/// Greedy merging on the re-ranked matrix without distance updates. Pairs are
/// visited by ascending distance (ties by index pair) until the distance
/// reaches mct_merge_threshold. Identities are numbered from 1 in order of
/// earliest member start frame.
Association associate(std::span<const Trajectory> trajectories, const PipelineConfig& config);

std::vector<IdentityCluster> merge_trajectories(std::span<const Trajectory> trajectories,
                                                const PipelineConfig& config);

}  // namespace mtmc::mct
