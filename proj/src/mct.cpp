#include "mtmc/mct.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <tuple>

namespace mtmc::mct {

FeatureVector mean_feature(const Trajectory& trajectory) {
    FeatureVector mean;
    std::size_t count = 0;
    for (const auto& p : trajectory.points()) {
        if (!p.feature) continue;
        if (mean.empty()) mean.assign(p.feature->size(), 0.0);
        if (p.feature->size() != mean.size()) {
            throw ValidationError("inconsistent feature dimension within a trajectory");
        }
        ++count;
        for (std::size_t i = 0; i < mean.size(); ++i) {
            mean[i] += ((*p.feature)[i] - mean[i]) / static_cast<double>(count);
        }
    }
    if (count == 0) {
        throw ValidationError("trajectory in camera " + std::to_string(trajectory.camera()) +
                              " starting at frame " + std::to_string(trajectory.first_frame()) +
                              " has no features");
    }
    return mean;
}

std::vector<TrajectoryDescriptor> describe(std::span<const Trajectory> trajectories) {
    std::vector<TrajectoryDescriptor> out;
    out.reserve(trajectories.size());
    for (std::size_t i = 0; i < trajectories.size(); ++i) {
        const auto& t = trajectories[i];
        out.push_back({i, mean_feature(t), t.camera(), t.first_frame(), t.last_frame()});
    }
    return out;
}

Matrix euclidean_matrix(std::span<const TrajectoryDescriptor> descriptors) {
    const std::size_t n = descriptors.size();
    Matrix d(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            d(i, j) = d(j, i) = l2_distance(descriptors[i].mean_feature, descriptors[j].mean_feature);
        }
    }
    return d;
}

bool overlap_in_time(const Trajectory& a, const Trajectory& b) {
    return a.first_frame() <= b.last_frame() && b.first_frame() <= a.last_frame();
}

int temporal_gap(const Trajectory& a, const Trajectory& b) {
    return std::max(a.first_frame(), b.first_frame()) - std::min(a.last_frame(), b.last_frame());
}

bool compatible(std::span<const Trajectory* const> a, std::span<const Trajectory* const> b,
                const Trajectory& trigger_a, const Trajectory& trigger_b, const PipelineConfig& config) {
    if (temporal_gap(trigger_a, trigger_b) >= config.max_gap_frames) {
        return false;
    }
    for (const Trajectory* x : a) {
        for (const Trajectory* y : b) {
            if (!overlap_in_time(*x, *y)) continue;
            if (x->camera() == y->camera() || !config.cameras_overlap(x->camera(), y->camera())) {
                return false;
            }
        }
    }
    return true;
}

bool compatible(const IdentityCluster& a, const IdentityCluster& b, const Trajectory& trigger_a,
                const Trajectory& trigger_b, const PipelineConfig& config) {
    std::vector<const Trajectory*> pa, pb;
    for (const auto& t : a.members) pa.push_back(&t);
    for (const auto& t : b.members) pb.push_back(&t);
    return compatible(pa, pb, trigger_a, trigger_b, config);
}

Association associate(std::span<const Trajectory> trajectories, const PipelineConfig& config) {
    const std::size_t n = trajectories.size();
    Association result;
    if (n == 0) return result;

    const auto descriptors = describe(trajectories);
    const Matrix dist = k_reciprocal_rerank(euclidean_matrix(descriptors), config.rerank_k1,
                                            config.rerank_k2, config.rerank_lambda);

    std::vector<std::tuple<double, std::size_t, std::size_t>> pairs;
    pairs.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(dist(i, j), i, j);
    }
    std::sort(pairs.begin(), pairs.end());

    // Union-find whose root is always the smallest trajectory index.
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<std::vector<const Trajectory*>> members(n);
    for (std::size_t i = 0; i < n; ++i) members[i].push_back(&trajectories[i]);

    for (const auto& [d, i, j] : pairs) {
        if (d >= config.mct_merge_threshold) break;
        const std::size_t ri = find(i);
        const std::size_t rj = find(j);
        if (ri == rj) continue;
        if (!compatible(members[ri], members[rj], trajectories[i], trajectories[j], config)) continue;
        const std::size_t root = std::min(ri, rj);
        const std::size_t child = std::max(ri, rj);
        parent[child] = root;
        members[root].insert(members[root].end(), members[child].begin(), members[child].end());
        members[child].clear();
        result.merges.push_back({i, j, d});
    }

    std::vector<std::size_t> roots;
    for (std::size_t i = 0; i < n; ++i) {
        if (find(i) == i) roots.push_back(i);
    }
    std::vector<int> start(n, std::numeric_limits<int>::max());
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = find(i);
        start[r] = std::min(start[r], trajectories[i].first_frame());
    }
    std::stable_sort(roots.begin(), roots.end(), [&](std::size_t a, std::size_t b) { return start[a] < start[b]; });

    std::map<std::size_t, std::size_t> position;
    for (std::size_t k = 0; k < roots.size(); ++k) {
        position[roots[k]] = k;
        result.clusters.push_back(IdentityCluster{static_cast<int>(k) + 1, {}});
    }
    result.cluster_of.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t k = position.at(find(i));
        result.cluster_of[i] = k;
        result.clusters[k].members.push_back(trajectories[i]);
    }
    return result;
}

std::vector<IdentityCluster> merge_trajectories(std::span<const Trajectory> trajectories,
                                                const PipelineConfig& config) {
    return associate(trajectories, config).clusters;
}

}  // namespace mtmc::mct
