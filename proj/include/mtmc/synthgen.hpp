#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "mtmc/config.hpp"
#include "mtmc/types.hpp"

// Deterministic synthetic multi-camera worlds: ground-truth walks, noisy
// detections and identity-clustered appearance features.
namespace mtmc::synth {

/// Portable random source: std::mt19937_64 (fully specified by the standard)
/// with hand-written transforms, so draws are identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform();  // [0, 1)
    double uniform(double lo, double hi);
    int uniform_int(int lo, int hi);  // inclusive
    double normal();                  // standard normal, Box-Muller
    bool bernoulli(double p);
    int poisson(double mean);

private:
    std::mt19937_64 engine_;
    std::optional<double> spare_normal_;
};

/// Camera-to-camera move. Travel is the number of frames from the last frame
/// seen in `from` to the first frame seen in `to`; it may be <= 0 only for an
/// overlapping camera pair (the identity is then visible in both).
struct Transition {
    int from = 0;
    int to = 0;
    int min_travel = 1;
    int max_travel = 1;

    friend bool operator==(const Transition&, const Transition&) = default;
};

struct WorldConfig {
    std::uint64_t seed = 1;
    int n_identities = 10;
    int n_cameras = 3;
    std::set<CameraPair> overlapping_camera_pairs{{1, 2}};
    double fps = 10.0;
    double duration_s = 60.0;
    double min_speed = 1.0;  // pixels per frame
    double max_speed = 4.0;
    std::vector<Transition> transitions{{1, 2, -20, -5}, {2, 1, -20, -5}, {2, 3, 20, 80},
                                        {3, 2, 20, 80},  {1, 3, 30, 100}, {3, 1, 30, 100}};
    double min_box_height = 90.0;
    double max_box_height = 150.0;
    double box_aspect = 0.4;  // width / height
    double image_width = 1920.0;
    double image_height = 1080.0;
    int min_dwell = 80;  // frames per camera visit
    int max_dwell = 200;
    int max_visits = 3;

    int total_frames() const;

    friend bool operator==(const WorldConfig&, const WorldConfig&) = default;
};

struct NoiseConfig {
    double jitter_sigma = 1.0;  // pixels, per box coordinate
    double miss_rate = 0.05;
    double false_alarm_rate = 0.05;  // expected false alarms per camera and frame
    int feature_dim = 16;
    // Distance between any two identity embeddings.
    double separation = 2.0;
    // Expected norm of the per-detection feature noise.
    double feature_noise = 0.5;
    // Expected norm of a per-trajectory (viewpoint) feature offset.
    double view_noise = 0.2;
    double min_confidence = 0.91;  // true detections
    double max_confidence = 1.0;

    friend bool operator==(const NoiseConfig&, const NoiseConfig&) = default;
};

/// Throws ValidationError describing the first problem found.
void validate(const WorldConfig& world);
void validate(const NoiseConfig& noise, const WorldConfig& world);

/// Ground truth: identity k (1-based) has one member trajectory per camera
/// visit, in visit order. Deterministic in `world.seed`.
std::vector<IdentityCluster> generate_world(const WorldConfig& world);

struct RenderedDetections {
    std::vector<Detection> detections;  // sorted by (camera, frame)
    // True identity per detection; empty for false alarms.
    std::vector<std::optional<int>> labels;
};

/// Identity embeddings: scaled simplex vertices, pairwise `separation` apart.
std::vector<FeatureVector> identity_embeddings(int n_identities, const NoiseConfig& noise);

/// Samples detections from ground truth: misses, box jitter, feature noise
/// around each identity's embedding, and false alarms far from every
/// embedding. Deterministic in `seed`.
RenderedDetections render_detections(const std::vector<IdentityCluster>& ground_truth, const WorldConfig& world,
                                     const NoiseConfig& noise, std::uint64_t seed);

}  // namespace mtmc::synth
