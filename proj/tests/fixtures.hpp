#pragma once

#include <optional>
#include <random>
#include <set>
#include <vector>

#include "mtmc/types.hpp"

namespace fixtures {

inline mtmc::BoundingBox box(double l, double t, double r, double b) { return mtmc::BoundingBox{l, t, r, b}; }

// 10x20 box with its top-left corner at (x, y).
inline mtmc::BoundingBox box_at(double x, double y) { return box(x, y, x + 10.0, y + 20.0); }

inline mtmc::Detection det(int camera, int frame, mtmc::BoundingBox b, mtmc::FeatureVector f = {},
                           double confidence = 0.95) {
    mtmc::Detection d;
    d.camera = camera;
    d.frame = frame;
    d.box = b;
    d.confidence = confidence;
    d.feature = std::move(f);
    return d;
}

inline mtmc::TrackPoint point(int frame, mtmc::BoundingBox b, std::optional<mtmc::FeatureVector> f = std::nullopt) {
    mtmc::TrackPoint p;
    p.frame = frame;
    p.box = b;
    p.feature = std::move(f);
    return p;
}

// Stationary trajectory covering [first, last] with a constant feature.
inline mtmc::Trajectory still(int camera, int first, int last, mtmc::BoundingBox b, const mtmc::FeatureVector& f) {
    std::vector<mtmc::TrackPoint> pts;
    for (int t = first; t <= last; ++t) pts.push_back(point(t, b, f));
    return mtmc::Trajectory(camera, std::move(pts));
}

inline mtmc::IdentityCluster cluster(int identity, std::vector<mtmc::Trajectory> members) {
    return mtmc::IdentityCluster{identity, std::move(members)};
}

// Random identity clusters for format tests: up to 5 identities, each with
// up to 4 contiguous members spread over 3 cameras. Members of one identity
// and camera never share a frame. Interpolated points only appear strictly
// inside a member, so every member starts and ends on an observed point.
inline std::vector<mtmc::IdentityCluster> random_clusters(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> n_ids(0, 5), n_members(1, 4), camera(1, 3), start(0, 500), length(1, 30);
    std::uniform_real_distribution<double> coord(-50.0, 1900.0), size(1.0, 300.0), unit(0.0, 1.0);
    std::vector<mtmc::IdentityCluster> out;
    std::set<int> labels;
    std::uniform_int_distribution<int> label(-20, 1000);
    const int ids = n_ids(rng);
    for (int k = 0; k < ids; ++k) {
        int id = label(rng);
        while (!labels.insert(id).second) id = label(rng);
        mtmc::IdentityCluster c{id, {}};
        std::set<std::pair<int, int>> used;  // (camera, frame)
        const int members = n_members(rng);
        for (int m = 0; m < members; ++m) {
            const int cam = camera(rng);
            const int first = start(rng);
            const int len = length(rng);
            bool clash = false;
            for (int f = first; f < first + len; ++f) clash = clash || used.count({cam, f}) > 0;
            if (clash) continue;
            std::vector<mtmc::TrackPoint> pts;
            for (int f = first; f < first + len; ++f) {
                used.insert({cam, f});
                const double l = coord(rng), t = coord(rng);
                mtmc::TrackPoint p = point(f, box(l, t, l + size(rng), t + size(rng)));
                p.interpolated = f != first && f != first + len - 1 && unit(rng) < 0.3;
                pts.push_back(p);
            }
            c.members.emplace_back(cam, std::move(pts));
        }
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace fixtures
