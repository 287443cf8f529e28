#include "mtmc/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "mtmc/sct.hpp"

namespace mtmc {

void attach_features(std::vector<Detection>& detections, std::vector<FeatureVector> features) {
    if (features.size() != detections.size()) {
        throw ValidationError("feature count " + std::to_string(features.size()) + " does not match detection count " +
                              std::to_string(detections.size()));
    }
    const std::size_t dim = features.empty() ? 0 : features.front().size();
    for (std::size_t i = 0; i < detections.size(); ++i) {
        if (features[i].size() != dim) {
            throw ValidationError("feature row " + std::to_string(i + 1) + " has a different dimension");
        }
        detections[i].feature = std::move(features[i]);
    }
}

void normalize_features(std::vector<Detection>& detections) {
    for (auto& d : detections) {
        double norm = 0.0;
        for (double x : d.feature) norm += x * x;
        norm = std::sqrt(norm);
        if (norm > 0.0) {
            for (double& x : d.feature) x /= norm;
        }
    }
}

PipelineResult run_pipeline(std::span<const Detection> detections, const PipelineConfig& config, bool sct_only,
                            unsigned jobs) {
    std::map<int, std::vector<Detection>> per_camera;
    std::map<int, std::vector<std::size_t>> positions;  // index into `detections`
    for (std::size_t i = 0; i < detections.size(); ++i) {
        per_camera[detections[i].camera].push_back(detections[i]);
        positions[detections[i].camera].push_back(i);
    }
    if (config.normalize_features) {
        for (auto& [camera, dets] : per_camera) normalize_features(dets);
    }

    std::vector<int> cameras;
    for (const auto& [camera, dets] : per_camera) cameras.push_back(camera);
    std::vector<std::vector<Trajectory>> tracked(cameras.size());
    std::vector<std::exception_ptr> errors(cameras.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < cameras.size(); k = next++) {
            try {
                auto local = sct::track_camera(per_camera.at(cameras[k]), config);
                const auto& global = positions.at(cameras[k]);
                for (auto& t : local) {
                    auto points = t.points();
                    for (auto& p : points) {
                        if (p.source) p.source = global[*p.source];
                    }
                    tracked[k].emplace_back(t.camera(), std::move(points));
                }
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(cameras.size())));
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    PipelineResult result;
    for (std::size_t k = 0; k < cameras.size(); ++k) {
        result.trajectories_per_camera[cameras[k]] = tracked[k].size();
        std::move(tracked[k].begin(), tracked[k].end(), std::back_inserter(result.trajectories));
    }

    if (sct_only) {
        int label = 1;
        for (const auto& t : result.trajectories) result.identities.push_back(IdentityCluster{label++, {t}});
    } else {
        auto association = mct::associate(result.trajectories, config);
        result.identities = std::move(association.clusters);
        result.merges = std::move(association.merges);
    }
    return result;
}

}  // namespace mtmc
