#include "mtmc/sct.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "mtmc/geometry.hpp"

namespace mtmc::sct {

double pairwise_weight(const Detection& a, const Detection& b, const PipelineConfig& config) {
    if (gate(iou(a.box, b.box), config.iou_gate) == kInf) {
        return -kInf;
    }
    return config.s - l2_distance(a.feature, b.feature);
}

Matching link_adjacent_frames(std::span<const Detection> frame_t, std::span<const Detection> frame_t1,
                              const PipelineConfig& config) {
    WeightMatrix w(frame_t.size(), frame_t1.size());
    for (std::size_t i = 0; i < frame_t.size(); ++i) {
        for (std::size_t j = 0; j < frame_t1.size(); ++j) {
            w(i, j) = pairwise_weight(frame_t[i], frame_t1[j], config);
        }
    }
    Matching matching = solve_max_weight_matching(w);
    std::erase_if(matching, [&](const auto& pair) { return w(pair.first, pair.second) < 0.0; });
    return matching;
}

std::vector<Tracklet> build_tracklets(std::span<const Detection> window, const PipelineConfig& config,
                                      std::size_t first_source) {
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    std::map<int, std::vector<std::size_t>> by_frame;
    for (std::size_t i = 0; i < window.size(); ++i) {
        by_frame[window[i].frame].push_back(i);
    }

    std::vector<std::size_t> next(window.size(), kNone), prev(window.size(), kNone);
    for (auto it = by_frame.begin(); it != by_frame.end(); ++it) {
        auto nx = std::next(it);
        if (nx == by_frame.end() || nx->first != it->first + 1) continue;
        std::vector<Detection> current, following;
        for (std::size_t i : it->second) current.push_back(window[i]);
        for (std::size_t j : nx->second) following.push_back(window[j]);
        for (const auto& [r, c] : link_adjacent_frames(current, following, config)) {
            next[it->second[r]] = nx->second[c];
            prev[nx->second[c]] = it->second[r];
        }
    }

    std::vector<Tracklet> tracklets;
    for (const auto& [frame, indices] : by_frame) {
        for (std::size_t start : indices) {
            if (prev[start] != kNone || next[start] == kNone) continue;
            std::vector<TrackPoint> points;
            for (std::size_t k = start; k != kNone; k = next[k]) {
                const auto& d = window[k];
                points.push_back(TrackPoint{d.frame, d.box, d.feature, false, first_source + k});
            }
            tracklets.emplace_back(window[start].camera, std::move(points));
        }
    }
    return tracklets;
}

Endpoints endpoints(const Trajectory& a, const Trajectory& b) {
    const bool a_first = a.last_frame() <= b.last_frame();
    const Trajectory& earlier = a_first ? a : b;
    const Trajectory& other = a_first ? b : a;
    const int t_i = earlier.last_frame();
    const auto& pts = other.points();
    // `other` ends at or after t_i, so a point at or after t_i always exists.
    auto it = std::lower_bound(pts.begin(), pts.end(), t_i,
                               [](const TrackPoint& p, int f) { return p.frame < f; });
    return Endpoints{t_i, it->frame, a_first};
}

namespace {

FeatureVector average_near(const Trajectory& t, int frame, int count) {
    std::vector<const TrackPoint*> candidates;
    for (const auto& p : t.points()) {
        if (p.feature) candidates.push_back(&p);
    }
    if (candidates.empty()) {
        throw ValidationError("trajectory in camera " + std::to_string(t.camera()) +
                              " has no features");
    }
    std::stable_sort(candidates.begin(), candidates.end(), [frame](const TrackPoint* x, const TrackPoint* y) {
        return std::abs(x->frame - frame) < std::abs(y->frame - frame);
    });
    const std::size_t n = std::min(candidates.size(), static_cast<std::size_t>(count));
    // Running mean: exact when all features are equal.
    FeatureVector mean(candidates.front()->feature->size(), 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        const auto& f = *candidates[k]->feature;
        for (std::size_t i = 0; i < mean.size(); ++i) mean[i] += (f[i] - mean[i]) / static_cast<double>(k + 1);
    }
    return mean;
}

}  // namespace

double appearance_distance(const Trajectory& a, const Trajectory& b, const PipelineConfig& config) {
    const Endpoints e = endpoints(a, b);
    const Trajectory& earlier = e.a_ends_first ? a : b;
    const Trajectory& other = e.a_ends_first ? b : a;
    return l2_distance(average_near(earlier, e.t_i, config.neighbor_frames),
                       average_near(other, e.t_u, config.neighbor_frames));
}

double separation_distance(const Trajectory& a, const Trajectory& b, const PipelineConfig& config) {
    const Endpoints e = endpoints(a, b);
    if (e.t_u == e.t_i) {
        return 0.0;
    }
    const Trajectory& earlier = e.a_ends_first ? a : b;
    const Trajectory& other = e.a_ends_first ? b : a;
    const BoundingBox& from = earlier.at(e.t_i)->box;
    const BoundingBox& to = other.at(e.t_u)->box;
    const double dist = std::hypot(to.center_x() - from.center_x(), to.center_y() - from.center_y());
    const double speed = dist / static_cast<double>(e.t_u - e.t_i);
    return speed < config.speed_threshold ? 0.0 : kInf;
}

double overlap_distance(const Trajectory& a, const Trajectory& b, const PipelineConfig& config) {
    if (a.last_frame() < b.first_frame() || b.last_frame() < a.first_frame()) {
        return 0.0;
    }
    double sum = 0.0;
    std::size_t common = 0;
    for (const auto& p : a.points()) {
        if (const TrackPoint* q = b.at(p.frame)) {
            sum += iou(p.box, q->box);
            ++common;
        }
    }
    if (common == 0) {
        return 0.0;
    }
    return sum / static_cast<double>(common) >= config.overlap_iou_threshold ? 0.0 : kInf;
}

SctDistance sct_distance_parts(const Trajectory& a, const Trajectory& b, const PipelineConfig& config) {
    return SctDistance{appearance_distance(a, b, config), separation_distance(a, b, config),
                       overlap_distance(a, b, config)};
}

double sct_distance(const Trajectory& a, const Trajectory& b, const PipelineConfig& config) {
    // Gates are cheap; skip the feature averaging when one already fails.
    if (overlap_distance(a, b, config) == kInf || separation_distance(a, b, config) == kInf) {
        return kInf;
    }
    return appearance_distance(a, b, config);
}

Trajectory concatenate(const Trajectory& a, const Trajectory& b) {
    if (a.camera() != b.camera()) {
        throw ValidationError("cannot concatenate trajectories from different cameras");
    }
    const bool a_wins = a.first_frame() <= b.first_frame();
    const auto& pa = a.points();
    const auto& pb = b.points();
    std::vector<TrackPoint> merged;
    merged.reserve(pa.size() + pb.size());
    std::size_t i = 0, j = 0;
    while (i < pa.size() || j < pb.size()) {
        if (j == pb.size() || (i < pa.size() && pa[i].frame < pb[j].frame)) {
            merged.push_back(pa[i++]);
        } else if (i == pa.size() || pb[j].frame < pa[i].frame) {
            merged.push_back(pb[j++]);
        } else {
            merged.push_back(a_wins ? pa[i] : pb[j]);
            ++i;
            ++j;
        }
    }
    return Trajectory(a.camera(), std::move(merged));
}

std::vector<Trajectory> cluster_tracklets(std::vector<Trajectory> items, const PipelineConfig& config) {
    const double stop = config.sct_stop_threshold();
    std::vector<std::vector<double>> dist(items.size(), std::vector<double>(items.size(), kInf));
    for (std::size_t i = 0; i < items.size(); ++i) {
        for (std::size_t j = i + 1; j < items.size(); ++j) {
            dist[i][j] = dist[j][i] = sct_distance(items[i], items[j], config);
        }
    }

    while (items.size() > 1) {
        double best = kInf;
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = 0; i < items.size(); ++i) {
            for (std::size_t j = i + 1; j < items.size(); ++j) {
                if (dist[i][j] < best) {
                    best = dist[i][j];
                    bi = i;
                    bj = j;
                }
            }
        }
        if (!(best <= stop)) {
            break;
        }
        items[bi] = concatenate(items[bi], items[bj]);
        items.erase(items.begin() + static_cast<std::ptrdiff_t>(bj));
        dist.erase(dist.begin() + static_cast<std::ptrdiff_t>(bj));
        for (auto& row : dist) row.erase(row.begin() + static_cast<std::ptrdiff_t>(bj));
        for (std::size_t k = 0; k < items.size(); ++k) {
            if (k == bi) continue;
            dist[bi][k] = dist[k][bi] = sct_distance(items[bi], items[k], config);
        }
    }
    return items;
}

Trajectory interpolate_and_smooth(const Trajectory& trajectory, const PipelineConfig& config) {
    std::vector<TrackPoint> filled;
    const auto& pts = trajectory.points();
    filled.reserve(static_cast<std::size_t>(trajectory.last_frame() - trajectory.first_frame() + 1));
    for (std::size_t k = 0; k < pts.size(); ++k) {
        if (k > 0) {
            const auto& lo = pts[k - 1];
            const auto& hi = pts[k];
            const double span = static_cast<double>(hi.frame - lo.frame);
            for (int f = lo.frame + 1; f < hi.frame; ++f) {
                const double alpha = static_cast<double>(f - lo.frame) / span;
                auto lerp = [alpha](double x, double y) { return x + alpha * (y - x); };
                TrackPoint p;
                p.frame = f;
                p.box = BoundingBox{lerp(lo.box.left, hi.box.left), lerp(lo.box.top, hi.box.top),
                                    lerp(lo.box.right, hi.box.right), lerp(lo.box.bottom, hi.box.bottom)};
                p.interpolated = true;
                filled.push_back(std::move(p));
            }
        }
        filled.push_back(pts[k]);
    }

    const int half = config.smoothing_window / 2;
    if (half > 0) {
        const auto n = static_cast<int>(filled.size());
        std::vector<BoundingBox> smoothed(filled.size());
        for (int k = 0; k < n; ++k) {
            const int lo = std::max(0, k - half);
            const int hi = std::min(n - 1, k + half);
            BoundingBox acc{0.0, 0.0, 0.0, 0.0};
            for (int m = lo; m <= hi; ++m) {
                acc.left += filled[m].box.left;
                acc.top += filled[m].box.top;
                acc.right += filled[m].box.right;
                acc.bottom += filled[m].box.bottom;
            }
            const double count = static_cast<double>(hi - lo + 1);
            smoothed[k] = BoundingBox{acc.left / count, acc.top / count, acc.right / count, acc.bottom / count};
        }
        for (int k = 0; k < n; ++k) filled[k].box = smoothed[k];
    }
    return Trajectory(trajectory.camera(), std::move(filled));
}

std::vector<Trajectory> track_camera(std::span<const Detection> detections, const PipelineConfig& config) {
    if (detections.empty()) {
        return {};
    }
    std::vector<std::size_t> order(detections.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return detections[i].frame < detections[j].frame; });
    std::vector<Detection> sorted;
    sorted.reserve(order.size());
    for (std::size_t i : order) sorted.push_back(detections[i]);

    std::vector<Trajectory> live, retired;
    const int first = sorted.front().frame;
    std::size_t begin = 0;
    while (begin < sorted.size()) {
        const int window_index = (sorted[begin].frame - first) / config.window_frames;
        const int window_start = first + window_index * config.window_frames;
        const int window_end = window_start + config.window_frames;
        std::size_t end = begin;
        while (end < sorted.size() && sorted[end].frame < window_end) ++end;

        auto stale = std::stable_partition(live.begin(), live.end(), [&](const Trajectory& t) {
            return t.last_frame() >= window_start - config.sct_max_age_frames;
        });
        std::move(stale, live.end(), std::back_inserter(retired));
        live.erase(stale, live.end());

        const std::span<const Detection> window(sorted.data() + begin, end - begin);
        auto tracklets = build_tracklets(window, config, begin);
        std::move(tracklets.begin(), tracklets.end(), std::back_inserter(live));
        live = cluster_tracklets(std::move(live), config);
        begin = end;
    }
    std::move(live.begin(), live.end(), std::back_inserter(retired));

    std::vector<Trajectory> out;
    out.reserve(retired.size());
    for (const auto& t : retired) {
        std::vector<TrackPoint> points = t.points();
        for (auto& p : points) {
            if (p.source) p.source = order[*p.source];
        }
        out.push_back(interpolate_and_smooth(Trajectory(t.camera(), std::move(points)), config));
    }
    std::sort(out.begin(), out.end(), [](const Trajectory& a, const Trajectory& b) {
        if (a.first_frame() != b.first_frame()) return a.first_frame() < b.first_frame();
        if (a.last_frame() != b.last_frame()) return a.last_frame() < b.last_frame();
        return a.points().front().source < b.points().front().source;
    });
    return out;
}

}  // namespace mtmc::sct
