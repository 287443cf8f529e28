#include "mtmc/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mtmc::synth {

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

int Rng::uniform_int(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) - lo + 1);
    return lo + static_cast<int>(engine_() % span);
}

double Rng::normal() {
    if (spare_normal_) {
        const double z = *spare_normal_;
        spare_normal_.reset();
        return z;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * M_PI * u2;
    spare_normal_ = radius * std::sin(angle);
    return radius * std::cos(angle);
}

bool Rng::bernoulli(double p) { return uniform() < p; }

int Rng::poisson(double mean) {
    if (mean <= 0.0) return 0;
    const double limit = std::exp(-mean);
    int k = 0;
    double prod = uniform();
    while (prod > limit) {
        ++k;
        prod *= uniform();
    }
    return k;
}

int WorldConfig::total_frames() const { return static_cast<int>(std::lround(fps * duration_s)); }

void validate(const WorldConfig& w) {
    auto fail = [](const std::string& msg) { throw ValidationError("world config: " + msg); };
    if (w.n_identities < 1) fail("n_identities must be >= 1");
    if (w.n_cameras < 1) fail("n_cameras must be >= 1");
    if (!(w.fps > 0.0) || !(w.duration_s > 0.0)) fail("fps and duration_s must be > 0");
    if (!(w.min_speed > 0.0) || w.min_speed > w.max_speed) fail("speed range must be non-empty and positive");
    if (!(w.min_box_height > 0.0) || w.min_box_height > w.max_box_height) fail("box height range must be non-empty");
    if (!(w.box_aspect > 0.0)) fail("box_aspect must be > 0");
    if (w.image_width < w.max_box_height * w.box_aspect || w.image_height < w.max_box_height) {
        fail("image extent smaller than the largest box");
    }
    if (w.min_dwell < 2 || w.min_dwell > w.max_dwell) fail("dwell range must be non-empty with min_dwell >= 2");
    if (w.max_visits < 1) fail("max_visits must be >= 1");
    if (w.total_frames() < w.min_dwell) fail("duration shorter than min_dwell");
    for (const auto& [a, b] : w.overlapping_camera_pairs) {
        if (a < 1 || b > w.n_cameras || a >= b) fail("overlapping camera pair out of range");
    }
    for (const auto& t : w.transitions) {
        if (t.from < 1 || t.from > w.n_cameras || t.to < 1 || t.to > w.n_cameras || t.from == t.to) {
            fail("transition " + std::to_string(t.from) + "->" + std::to_string(t.to) + " names invalid cameras");
        }
        if (t.min_travel > t.max_travel) fail("transition travel range is empty");
        const bool overlapping = w.overlapping_camera_pairs.count(camera_pair(t.from, t.to)) > 0;
        if (!overlapping && t.min_travel <= 0) {
            fail("travel time between non-overlapping cameras " + std::to_string(t.from) + "->" +
                 std::to_string(t.to) + " must be > 0");
        }
        // Keeps successive visits to one camera disjoint in time.
        if (w.min_dwell <= 2 * std::max(0, -t.min_travel) + 1) fail("min_dwell too short for the overlap travel times");
    }
    if (w.max_visits > 1 && w.n_cameras > 1) {
        for (int cam = 1; cam <= w.n_cameras; ++cam) {
            const bool has_exit = std::any_of(w.transitions.begin(), w.transitions.end(),
                                              [cam](const Transition& t) { return t.from == cam; });
            if (!has_exit) fail("camera " + std::to_string(cam) + " has no outgoing transition");
        }
    }
}

void validate(const NoiseConfig& n, const WorldConfig& w) {
    auto fail = [](const std::string& msg) { throw ValidationError("noise config: " + msg); };
    if (!(n.jitter_sigma >= 0.0)) fail("jitter_sigma must be >= 0");
    if (!(n.miss_rate >= 0.0) || n.miss_rate > 1.0) fail("miss_rate must lie in [0, 1]");
    if (!(n.false_alarm_rate >= 0.0)) fail("false_alarm_rate must be >= 0");
    if (n.feature_dim < w.n_identities + 1) fail("feature_dim must be at least n_identities + 1");
    if (!(n.separation >= 0.0) || !(n.feature_noise >= 0.0) || !(n.view_noise >= 0.0)) {
        fail("feature scales must be >= 0");
    }
    if (!(n.min_confidence >= 0.0) || n.min_confidence > n.max_confidence || n.max_confidence > 1.0) {
        fail("confidence range must lie in [0, 1]");
    }
}

namespace {

std::vector<TrackPoint> walk(Rng& rng, const WorldConfig& w, int first, int last) {
    const double height = rng.uniform(w.min_box_height, w.max_box_height);
    const double width = height * w.box_aspect;
    const double speed = rng.uniform(w.min_speed, w.max_speed);
    auto random_point = [&] {
        return std::pair{rng.uniform(0.5 * width, w.image_width - 0.5 * width),
                         rng.uniform(0.5 * height, w.image_height - 0.5 * height)};
    };
    auto [x, y] = random_point();
    auto [tx, ty] = random_point();

    std::vector<TrackPoint> points;
    points.reserve(static_cast<std::size_t>(last - first + 1));
    for (int f = first; f <= last; ++f) {
        TrackPoint p;
        p.frame = f;
        p.box = BoundingBox{x - 0.5 * width, y - 0.5 * height, x + 0.5 * width, y + 0.5 * height};
        points.push_back(p);

        double remaining = speed;
        double dist = std::hypot(tx - x, ty - y);
        while (dist <= remaining) {
            x = tx;
            y = ty;
            remaining -= dist;
            std::tie(tx, ty) = random_point();
            dist = std::hypot(tx - x, ty - y);
        }
        x += remaining * (tx - x) / dist;
        y += remaining * (ty - y) / dist;
    }
    return points;
}

}  // namespace

std::vector<IdentityCluster> generate_world(const WorldConfig& w) {
    validate(w);
    Rng rng(w.seed);
    const int total = w.total_frames();

    std::vector<IdentityCluster> identities;
    for (int id = 1; id <= w.n_identities; ++id) {
        IdentityCluster cluster{id, {}};
        int camera = rng.uniform_int(1, w.n_cameras);
        int start = rng.uniform_int(0, total - w.min_dwell);
        const int visits = rng.uniform_int(1, w.max_visits);
        for (int v = 0; v < visits; ++v) {
            const int dwell = rng.uniform_int(w.min_dwell, w.max_dwell);
            const int last = std::min(total - 1, start + dwell - 1);
            cluster.members.emplace_back(camera, walk(rng, w, start, last));

            std::vector<const Transition*> exits;
            for (const auto& t : w.transitions) {
                if (t.from == camera) exits.push_back(&t);
            }
            if (exits.empty() || v + 1 == visits) break;
            const Transition& t = *exits[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(exits.size()) - 1))];
            const int next_start = last + rng.uniform_int(t.min_travel, t.max_travel);
            if (next_start + w.min_dwell > total) break;
            camera = t.to;
            start = next_start;
        }
        identities.push_back(std::move(cluster));
    }
    return identities;
}

std::vector<FeatureVector> identity_embeddings(int n_identities, const NoiseConfig& noise) {
    const double scale = noise.separation / std::sqrt(2.0);
    std::vector<FeatureVector> out;
    for (int k = 0; k < n_identities; ++k) {
        FeatureVector e(static_cast<std::size_t>(noise.feature_dim), 0.0);
        e[static_cast<std::size_t>(k)] = scale;
        out.push_back(std::move(e));
    }
    return out;
}

RenderedDetections render_detections(const std::vector<IdentityCluster>& ground_truth, const WorldConfig& world,
                                     const NoiseConfig& noise, std::uint64_t seed) {
    validate(noise, world);
    if (static_cast<int>(ground_truth.size()) + 1 > noise.feature_dim) {
        throw ValidationError("noise config: feature_dim must exceed the number of identities");
    }
    Rng rng(seed);
    const auto dim = static_cast<std::size_t>(noise.feature_dim);
    const double per_component = noise.feature_noise / std::sqrt(static_cast<double>(dim));
    const double view_component = noise.view_noise / std::sqrt(static_cast<double>(dim));
    const auto embeddings = identity_embeddings(static_cast<int>(ground_truth.size()), noise);

    auto jittered = [&](const BoundingBox& b) {
        BoundingBox j{b.left + noise.jitter_sigma * rng.normal(), b.top + noise.jitter_sigma * rng.normal(),
                      b.right + noise.jitter_sigma * rng.normal(), b.bottom + noise.jitter_sigma * rng.normal()};
        if (j.right - j.left < 1.0) j.right = j.left + 1.0;
        if (j.bottom - j.top < 1.0) j.bottom = j.top + 1.0;
        return j;
    };

    RenderedDetections out;
    for (std::size_t k = 0; k < ground_truth.size(); ++k) {
        const auto& cluster = ground_truth[k];
        for (const auto& member : cluster.members) {
            FeatureVector view(dim);
            for (double& x : view) x = view_component * rng.normal();
            for (const auto& p : member.points()) {
                if (rng.bernoulli(noise.miss_rate)) continue;
                Detection d;
                d.camera = member.camera();
                d.frame = p.frame;
                d.box = jittered(p.box);
                d.confidence = rng.uniform(noise.min_confidence, noise.max_confidence);
                d.feature.resize(dim);
                for (std::size_t i = 0; i < dim; ++i) {
                    d.feature[i] = embeddings[k][i] + view[i] + per_component * rng.normal();
                }
                out.detections.push_back(std::move(d));
                out.labels.emplace_back(cluster.identity);
            }
        }
    }

    // False alarms: random boxes with features centered far out on the axis
    // no identity uses, and spread widely so they do not resemble each other.
    const double far = 5.0 * (noise.separation + noise.feature_noise + noise.view_noise + 1.0);
    const double far_component = far / std::sqrt(static_cast<double>(dim));
    const int total = world.total_frames();
    for (int cam = 1; cam <= world.n_cameras; ++cam) {
        for (int f = 0; f < total; ++f) {
            const int count = rng.poisson(noise.false_alarm_rate);
            for (int c = 0; c < count; ++c) {
                const double h = rng.uniform(world.min_box_height, world.max_box_height);
                const double wdt = h * world.box_aspect;
                const double left = rng.uniform(0.0, world.image_width - wdt);
                const double top = rng.uniform(0.0, world.image_height - h);
                Detection d;
                d.camera = cam;
                d.frame = f;
                d.box = BoundingBox{left, top, left + wdt, top + h};
                d.confidence = rng.uniform(0.5, 1.0);
                d.feature.resize(dim);
                for (std::size_t i = 0; i < dim; ++i) d.feature[i] = far_component * rng.normal();
                d.feature[dim - 1] += far;
                out.detections.push_back(std::move(d));
                out.labels.emplace_back(std::nullopt);
            }
        }
    }

    std::vector<std::size_t> order(out.detections.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& x = out.detections[a];
        const auto& y = out.detections[b];
        return std::pair{x.camera, x.frame} < std::pair{y.camera, y.frame};
    });
    RenderedDetections sorted;
    sorted.detections.reserve(order.size());
    sorted.labels.reserve(order.size());
    for (std::size_t i : order) {
        sorted.detections.push_back(std::move(out.detections[i]));
        sorted.labels.push_back(out.labels[i]);
    }
    return sorted;
}

}  // namespace mtmc::synth
