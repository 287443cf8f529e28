#include "mtmc/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <tuple>

namespace mtmc::io {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(sep, start);
        out.push_back(trim(line.substr(start, pos == std::string_view::npos ? pos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ": " + what);
}

double to_double(std::string_view text, std::size_t line, std::string_view field) {
    double value = 0.0;
    const auto* begin = text.data();
    const auto* end = text.data() + text.size();
    if (!text.empty() && *begin == '+') ++begin;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (text.empty() || ec != std::errc() || ptr != end) {
        fail(line, "field '" + std::string(field) + "': cannot parse '" + std::string(text) + "' as a number");
    }
    if (!std::isfinite(value)) {
        fail(line, "field '" + std::string(field) + "': non-finite value '" + std::string(text) + "'");
    }
    return value;
}

long long to_integer(std::string_view text, std::size_t line, std::string_view field) {
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
        fail(line, "field '" + std::string(field) + "': cannot parse '" + std::string(text) + "' as an integer");
    }
    return value;
}

int to_int(std::string_view text, std::size_t line, std::string_view field) {
    const long long v = to_integer(text, line, field);
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
        fail(line, "field '" + std::string(field) + "': integer out of range");
    }
    return static_cast<int>(v);
}

int to_non_negative(std::string_view text, std::size_t line, std::string_view field) {
    const int v = to_int(text, line, field);
    if (v < 0) fail(line, "field '" + std::string(field) + "' must be non-negative");
    return v;
}

bool to_bool(std::string_view text, std::size_t line, std::string_view field) {
    if (text == "1" || text == "true") return true;
    if (text == "0" || text == "false") return false;
    fail(line, "field '" + std::string(field) + "': expected true/false, got '" + std::string(text) + "'");
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    return in;
}

// Calls `fn(line_number, text)` for every non-blank line.
template <typename Fn>
void for_each_line(std::istream& in, Fn&& fn) {
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        const auto text = trim(line);
        if (text.empty()) continue;
        fn(number, text);
    }
}

using Setter = std::function<void(std::string_view value, std::size_t line)>;

void parse_key_values(std::istream& in, const std::map<std::string, Setter, std::less<>>& setters) {
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        std::string_view text = line;
        if (const auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
        text = trim(text);
        if (text.empty()) continue;
        const auto eq = text.find('=');
        if (eq == std::string_view::npos) fail(number, "expected 'key = value'");
        const auto key = trim(text.substr(0, eq));
        const auto value = trim(text.substr(eq + 1));
        const auto it = setters.find(key);
        if (it == setters.end()) fail(number, "unknown key '" + std::string(key) + "'");
        it->second(value, number);
    }
}

std::set<CameraPair> to_camera_pairs(std::string_view text, std::size_t line, std::string_view field) {
    std::set<CameraPair> pairs;
    std::string normalized(text);
    std::replace(normalized.begin(), normalized.end(), ',', ' ');
    std::istringstream tokens(normalized);
    std::string token;
    while (tokens >> token) {
        const auto dash = token.find('-');
        if (dash == std::string::npos) fail(line, "field '" + std::string(field) + "': expected pairs like 2-8");
        const int a = to_int(std::string_view(token).substr(0, dash), line, field);
        const int b = to_int(std::string_view(token).substr(dash + 1), line, field);
        pairs.insert(camera_pair(a, b));
    }
    return pairs;
}

std::string format_camera_pairs(const std::set<CameraPair>& pairs) {
    std::string out;
    for (const auto& [a, b] : pairs) {
        if (!out.empty()) out += ' ';
        out += std::to_string(a) + "-" + std::to_string(b);
    }
    return out;
}

}  // namespace

std::string format_decimal(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed, 6);
    if (ec != std::errc()) throw std::runtime_error("cannot format value");
    return std::string(buf, ptr);
}

// ---- detections and features -------------------------------------------

std::vector<Detection> parse_detections(std::istream& in) {
    std::vector<Detection> out;
    for_each_line(in, [&](std::size_t n, std::string_view text) {
        const auto f = split(text, ',');
        if (f.size() != 7) fail(n, "expected 7 comma-separated fields, got " + std::to_string(f.size()));
        Detection d;
        d.camera = to_non_negative(f[0], n, "camera");
        d.frame = to_non_negative(f[1], n, "frame");
        d.box = BoundingBox{to_double(f[2], n, "left"), to_double(f[3], n, "top"), to_double(f[4], n, "right"),
                            to_double(f[5], n, "bottom")};
        d.confidence = to_double(f[6], n, "confidence");
        if (d.box.left >= d.box.right) fail(n, "field 'right': box has left >= right");
        if (d.box.top >= d.box.bottom) fail(n, "field 'bottom': box has top >= bottom");
        out.push_back(std::move(d));
    });
    return out;
}

std::vector<Detection> parse_detections(const std::filesystem::path& path) {
    auto in = open_input(path);
    return parse_detections(in);
}

void write_detections(std::ostream& out, std::span<const Detection> detections) {
    for (const auto& d : detections) {
        out << d.camera << ',' << d.frame << ',' << format_decimal(d.box.left) << ',' << format_decimal(d.box.top)
            << ',' << format_decimal(d.box.right) << ',' << format_decimal(d.box.bottom) << ','
            << format_decimal(d.confidence) << '\n';
    }
}

std::vector<FeatureVector> parse_features(std::istream& in, std::size_t expected_count) {
    std::vector<FeatureVector> out;
    std::size_t dim = 0;
    bool have_header = false;
    for_each_line(in, [&](std::size_t n, std::string_view text) {
        if (!have_header) {
            if (text.substr(0, 2) != "d=") fail(n, "expected header 'd=<dimension>'");
            const int d = to_int(trim(text.substr(2)), n, "d");
            if (d < 0) fail(n, "feature dimension must be >= 0");
            dim = static_cast<std::size_t>(d);
            have_header = true;
            return;
        }
        const auto f = split(text, ',');
        if (f.size() != dim) {
            fail(n, "dimension mismatch: expected " + std::to_string(dim) + " values, got " + std::to_string(f.size()));
        }
        FeatureVector v(dim);
        for (std::size_t i = 0; i < dim; ++i) v[i] = to_double(f[i], n, "feature[" + std::to_string(i) + "]");
        out.push_back(std::move(v));
    });
    if (!have_header && expected_count > 0) throw ParseError("feature file is missing the 'd=<dimension>' header");
    if (out.size() != expected_count) {
        throw ParseError("feature count mismatch: expected " + std::to_string(expected_count) + " rows, got " +
                         std::to_string(out.size()));
    }
    return out;
}

std::vector<FeatureVector> parse_features(const std::filesystem::path& path, std::size_t expected_count) {
    auto in = open_input(path);
    return parse_features(in, expected_count);
}

void write_features(std::ostream& out, std::span<const Detection> detections) {
    const std::size_t dim = detections.empty() ? 0 : detections.front().feature.size();
    out << "d=" << dim << '\n';
    for (const auto& d : detections) {
        if (d.feature.size() != dim) throw ValidationError("detections carry features of different dimensions");
        for (std::size_t i = 0; i < dim; ++i) {
            if (i > 0) out << ',';
            out << format_decimal(d.feature[i]);
        }
        out << '\n';
    }
}

// ---- trajectories -------------------------------------------------------

namespace {

struct TrajectoryLine {
    int identity;
    int camera;
    const TrackPoint* point;
};

}  // namespace

void write_trajectories(std::ostream& out, std::span<const IdentityCluster> clusters) {
    std::vector<TrajectoryLine> lines;
    for (const auto& c : clusters) {
        for (const auto& m : c.members) {
            for (const auto& p : m.points()) lines.push_back({c.identity, m.camera(), &p});
        }
    }
    std::sort(lines.begin(), lines.end(), [](const TrajectoryLine& a, const TrajectoryLine& b) {
        return std::tie(a.identity, a.camera, a.point->frame) < std::tie(b.identity, b.camera, b.point->frame);
    });
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto& l = lines[i];
        if (i > 0 && lines[i - 1].identity == l.identity && lines[i - 1].camera == l.camera &&
            lines[i - 1].point->frame == l.point->frame) {
            throw ValidationError("duplicate (identity, camera, frame) = (" + std::to_string(l.identity) + ", " +
                                  std::to_string(l.camera) + ", " + std::to_string(l.point->frame) + ")");
        }
        const auto& b = l.point->box;
        out << l.identity << ',' << l.camera << ',' << l.point->frame << ',' << format_decimal(b.left) << ','
            << format_decimal(b.top) << ',' << format_decimal(b.right) << ',' << format_decimal(b.bottom) << ','
            << (l.point->interpolated ? 1 : 0) << '\n';
    }
}

void write_trajectories(const std::filesystem::path& path, std::span<const IdentityCluster> clusters) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    write_trajectories(out, clusters);
}

std::string trajectories_to_string(std::span<const IdentityCluster> clusters) {
    std::ostringstream out;
    write_trajectories(out, clusters);
    return out.str();
}

std::vector<IdentityCluster> parse_trajectories(std::istream& in) {
    std::map<int, std::map<int, std::map<int, TrackPoint>>> grouped;
    for_each_line(in, [&](std::size_t n, std::string_view text) {
        const auto f = split(text, ',');
        if (f.size() != 8) fail(n, "expected 8 comma-separated fields, got " + std::to_string(f.size()));
        const int identity = to_int(f[0], n, "identity");
        const int camera = to_non_negative(f[1], n, "camera");
        TrackPoint p;
        p.frame = to_non_negative(f[2], n, "frame");
        p.box = BoundingBox{to_double(f[3], n, "left"), to_double(f[4], n, "top"), to_double(f[5], n, "right"),
                            to_double(f[6], n, "bottom")};
        if (!p.box.valid()) fail(n, "invalid box");
        if (f[7] != "0" && f[7] != "1") fail(n, "field 'interpolated': expected 0 or 1");
        p.interpolated = f[7] == "1";
        if (!grouped[identity][camera].emplace(p.frame, p).second) {
            fail(n, "duplicate (identity, camera, frame) = (" + std::to_string(identity) + ", " +
                        std::to_string(camera) + ", " + std::to_string(p.frame) + ")");
        }
    });

    std::vector<IdentityCluster> out;
    for (auto& [identity, cameras] : grouped) {
        IdentityCluster cluster{identity, {}};
        for (auto& [camera, frames] : cameras) {
            std::vector<TrackPoint> run;
            auto flush = [&] {
                if (run.empty()) return;
                try {
                    cluster.members.emplace_back(camera, std::move(run));
                } catch (const ValidationError& e) {
                    throw ParseError("identity " + std::to_string(identity) + ": " + e.what());
                }
                run.clear();
            };
            for (auto& [frame, point] : frames) {
                if (!run.empty() && run.back().frame + 1 != frame) flush();
                run.push_back(point);
            }
            flush();
        }
        out.push_back(std::move(cluster));
    }
    return out;
}

std::vector<IdentityCluster> parse_trajectories(const std::filesystem::path& path) {
    auto in = open_input(path);
    return parse_trajectories(in);
}

// ---- pipeline config ----------------------------------------------------

PipelineConfig parse_config(std::istream& in) {
    PipelineConfig c;
    auto real = [](double& field, const char* name) {
        return Setter([&field, name](std::string_view v, std::size_t n) { field = to_double(v, n, name); });
    };
    auto integer = [](int& field, const char* name) {
        return Setter([&field, name](std::string_view v, std::size_t n) { field = to_int(v, n, name); });
    };
    const std::map<std::string, Setter, std::less<>> setters{
        {"s", real(c.s, "s")},
        {"sct_threshold",
         [&](std::string_view v, std::size_t n) {
             if (v == "none") {
                 c.sct_threshold.reset();
             } else {
                 c.sct_threshold = to_double(v, n, "sct_threshold");
             }
         }},
        {"iou_gate", real(c.iou_gate, "iou_gate")},
        {"window_frames", integer(c.window_frames, "window_frames")},
        {"neighbor_frames", integer(c.neighbor_frames, "neighbor_frames")},
        {"speed_threshold", real(c.speed_threshold, "speed_threshold")},
        {"overlap_iou_threshold", real(c.overlap_iou_threshold, "overlap_iou_threshold")},
        {"smoothing_window", integer(c.smoothing_window, "smoothing_window")},
        {"sct_max_age_frames", integer(c.sct_max_age_frames, "sct_max_age_frames")},
        {"rerank_k1", integer(c.rerank_k1, "rerank_k1")},
        {"rerank_k2", integer(c.rerank_k2, "rerank_k2")},
        {"rerank_lambda", real(c.rerank_lambda, "rerank_lambda")},
        {"mct_merge_threshold", real(c.mct_merge_threshold, "mct_merge_threshold")},
        {"max_gap_frames", integer(c.max_gap_frames, "max_gap_frames")},
        {"overlapping_camera_pairs",
         [&](std::string_view v, std::size_t n) {
             c.overlapping_camera_pairs = to_camera_pairs(v, n, "overlapping_camera_pairs");
         }},
        {"fps", real(c.fps, "fps")},
        {"detection_confidence_threshold", real(c.detection_confidence_threshold, "detection_confidence_threshold")},
        {"nms_iou_threshold", real(c.nms_iou_threshold, "nms_iou_threshold")},
        {"normalize_features",
         [&](std::string_view v, std::size_t n) { c.normalize_features = to_bool(v, n, "normalize_features"); }},
    };
    parse_key_values(in, setters);

    const auto violations = validate_config(c);
    if (!violations.empty()) {
        std::string msg = "invalid config:";
        for (const auto& v : violations) msg += " " + v.field + " (" + v.message + ");";
        throw ParseError(msg);
    }
    return c;
}

PipelineConfig parse_config(const std::filesystem::path& path) {
    auto in = open_input(path);
    return parse_config(in);
}

void write_config(std::ostream& out, const PipelineConfig& c) {
    out << "s = " << format_decimal(c.s) << '\n';
    if (c.sct_threshold) out << "sct_threshold = " << format_decimal(*c.sct_threshold) << '\n';
    out << "iou_gate = " << format_decimal(c.iou_gate) << '\n'
        << "window_frames = " << c.window_frames << '\n'
        << "neighbor_frames = " << c.neighbor_frames << '\n'
        << "speed_threshold = " << format_decimal(c.speed_threshold) << '\n'
        << "overlap_iou_threshold = " << format_decimal(c.overlap_iou_threshold) << '\n'
        << "smoothing_window = " << c.smoothing_window << '\n'
        << "sct_max_age_frames = " << c.sct_max_age_frames << '\n'
        << "rerank_k1 = " << c.rerank_k1 << '\n'
        << "rerank_k2 = " << c.rerank_k2 << '\n'
        << "rerank_lambda = " << format_decimal(c.rerank_lambda) << '\n'
        << "mct_merge_threshold = " << format_decimal(c.mct_merge_threshold) << '\n'
        << "max_gap_frames = " << c.max_gap_frames << '\n'
        << "overlapping_camera_pairs = " << format_camera_pairs(c.overlapping_camera_pairs) << '\n'
        << "fps = " << format_decimal(c.fps) << '\n'
        << "detection_confidence_threshold = " << format_decimal(c.detection_confidence_threshold) << '\n'
        << "nms_iou_threshold = " << format_decimal(c.nms_iou_threshold) << '\n'
        << "normalize_features = " << (c.normalize_features ? "true" : "false") << '\n';
}

// ---- synthetic world configs ---------------------------------------------

synth::WorldConfig parse_world_config(std::istream& in) {
    synth::WorldConfig w;
    bool transitions_given = false;
    auto real = [](double& field, const char* name) {
        return Setter([&field, name](std::string_view v, std::size_t n) { field = to_double(v, n, name); });
    };
    auto integer = [](int& field, const char* name) {
        return Setter([&field, name](std::string_view v, std::size_t n) { field = to_int(v, n, name); });
    };
    const std::map<std::string, Setter, std::less<>> setters{
        {"seed",
         [&](std::string_view v, std::size_t n) {
             const long long s = to_integer(v, n, "seed");
             if (s < 0) fail(n, "field 'seed' must be non-negative");
             w.seed = static_cast<std::uint64_t>(s);
         }},
        {"n_identities", integer(w.n_identities, "n_identities")},
        {"n_cameras", integer(w.n_cameras, "n_cameras")},
        {"overlapping_camera_pairs",
         [&](std::string_view v, std::size_t n) {
             w.overlapping_camera_pairs = to_camera_pairs(v, n, "overlapping_camera_pairs");
         }},
        {"fps", real(w.fps, "fps")},
        {"duration_s", real(w.duration_s, "duration_s")},
        {"min_speed", real(w.min_speed, "min_speed")},
        {"max_speed", real(w.max_speed, "max_speed")},
        {"transition",
         [&](std::string_view v, std::size_t n) {
             if (!transitions_given) w.transitions.clear();
             transitions_given = true;
             std::istringstream tokens{std::string(v)};
             std::string a, b, lo, hi, extra;
             if (!(tokens >> a >> b >> lo >> hi) || (tokens >> extra)) {
                 fail(n, "field 'transition': expected 'from to min_travel max_travel'");
             }
             w.transitions.push_back({to_int(a, n, "transition.from"), to_int(b, n, "transition.to"),
                                      to_int(lo, n, "transition.min_travel"), to_int(hi, n, "transition.max_travel")});
         }},
        {"min_box_height", real(w.min_box_height, "min_box_height")},
        {"max_box_height", real(w.max_box_height, "max_box_height")},
        {"box_aspect", real(w.box_aspect, "box_aspect")},
        {"image_width", real(w.image_width, "image_width")},
        {"image_height", real(w.image_height, "image_height")},
        {"min_dwell", integer(w.min_dwell, "min_dwell")},
        {"max_dwell", integer(w.max_dwell, "max_dwell")},
        {"max_visits", integer(w.max_visits, "max_visits")},
    };
    parse_key_values(in, setters);
    try {
        synth::validate(w);
    } catch (const ValidationError& e) {
        throw ParseError(e.what());
    }
    return w;
}

synth::WorldConfig parse_world_config(const std::filesystem::path& path) {
    auto in = open_input(path);
    return parse_world_config(in);
}

void write_world_config(std::ostream& out, const synth::WorldConfig& w) {
    out << "seed = " << w.seed << '\n'
        << "n_identities = " << w.n_identities << '\n'
        << "n_cameras = " << w.n_cameras << '\n'
        << "overlapping_camera_pairs = " << format_camera_pairs(w.overlapping_camera_pairs) << '\n'
        << "fps = " << format_decimal(w.fps) << '\n'
        << "duration_s = " << format_decimal(w.duration_s) << '\n'
        << "min_speed = " << format_decimal(w.min_speed) << '\n'
        << "max_speed = " << format_decimal(w.max_speed) << '\n';
    for (const auto& t : w.transitions) {
        out << "transition = " << t.from << ' ' << t.to << ' ' << t.min_travel << ' ' << t.max_travel << '\n';
    }
    out << "min_box_height = " << format_decimal(w.min_box_height) << '\n'
        << "max_box_height = " << format_decimal(w.max_box_height) << '\n'
        << "box_aspect = " << format_decimal(w.box_aspect) << '\n'
        << "image_width = " << format_decimal(w.image_width) << '\n'
        << "image_height = " << format_decimal(w.image_height) << '\n'
        << "min_dwell = " << w.min_dwell << '\n'
        << "max_dwell = " << w.max_dwell << '\n'
        << "max_visits = " << w.max_visits << '\n';
}

synth::NoiseConfig parse_noise_config(std::istream& in) {
    synth::NoiseConfig c;
    auto real = [](double& field, const char* name) {
        return Setter([&field, name](std::string_view v, std::size_t n) { field = to_double(v, n, name); });
    };
    const std::map<std::string, Setter, std::less<>> setters{
        {"jitter_sigma", real(c.jitter_sigma, "jitter_sigma")},
        {"miss_rate", real(c.miss_rate, "miss_rate")},
        {"false_alarm_rate", real(c.false_alarm_rate, "false_alarm_rate")},
        {"feature_dim", [&](std::string_view v, std::size_t n) { c.feature_dim = to_int(v, n, "feature_dim"); }},
        {"separation", real(c.separation, "separation")},
        {"feature_noise", real(c.feature_noise, "feature_noise")},
        {"view_noise", real(c.view_noise, "view_noise")},
        {"min_confidence", real(c.min_confidence, "min_confidence")},
        {"max_confidence", real(c.max_confidence, "max_confidence")},
    };
    parse_key_values(in, setters);
    return c;
}

synth::NoiseConfig parse_noise_config(const std::filesystem::path& path) {
    auto in = open_input(path);
    return parse_noise_config(in);
}

void write_noise_config(std::ostream& out, const synth::NoiseConfig& c) {
    out << "jitter_sigma = " << format_decimal(c.jitter_sigma) << '\n'
        << "miss_rate = " << format_decimal(c.miss_rate) << '\n'
        << "false_alarm_rate = " << format_decimal(c.false_alarm_rate) << '\n'
        << "feature_dim = " << c.feature_dim << '\n'
        << "separation = " << format_decimal(c.separation) << '\n'
        << "feature_noise = " << format_decimal(c.feature_noise) << '\n'
        << "view_noise = " << format_decimal(c.view_noise) << '\n'
        << "min_confidence = " << format_decimal(c.min_confidence) << '\n'
        << "max_confidence = " << format_decimal(c.max_confidence) << '\n';
}

// ---- reports ------------------------------------------------------------

void write_report(std::ostream& out, const metrics::IdMetricsReport& r) {
    out << "idf1 = " << format_decimal(r.idf1) << '\n'
        << "idp = " << format_decimal(r.idp) << '\n'
        << "idr = " << format_decimal(r.idr) << '\n'
        << "idtp = " << r.idtp << '\n'
        << "idfp = " << r.idfp << '\n'
        << "idfn = " << r.idfn << '\n';
}

metrics::IdMetricsReport parse_report(std::istream& in) {
    std::map<std::string, std::pair<std::string, std::size_t>, std::less<>> values;
    std::map<std::string, Setter, std::less<>> setters;
    for (const char* key : {"idf1", "idp", "idr", "idtp", "idfp", "idfn"}) {
        setters[key] = [&values, key](std::string_view v, std::size_t n) { values[key] = {std::string(v), n}; };
    }
    parse_key_values(in, setters);
    auto count = [&](const char* key) -> std::int64_t {
        const auto it = values.find(key);
        if (it == values.end()) throw ParseError(std::string("report is missing '") + key + "'");
        const long long v = to_integer(it->second.first, it->second.second, key);
        if (v < 0) fail(it->second.second, std::string("field '") + key + "' must be non-negative");
        return v;
    };
    const auto report = metrics::make_report(count("idtp"), count("idfp"), count("idfn"));
    const std::pair<const char*, double> derived[] = {{"idf1", report.idf1}, {"idp", report.idp}, {"idr", report.idr}};
    for (const auto& [key, expected] : derived) {
        const auto it = values.find(key);
        if (it != values.end() && it->second.first != format_decimal(expected)) {
            fail(it->second.second, std::string("field '") + key + "' disagrees with the counts");
        }
    }
    return report;
}

void write_report_row(std::ostream& out, const metrics::IdMetricsReport& r, bool with_header) {
    if (with_header) out << "idf1,idp,idr,idtp,idfp,idfn\n";
    out << format_decimal(r.idf1) << ',' << format_decimal(r.idp) << ',' << format_decimal(r.idr) << ',' << r.idtp
        << ',' << r.idfp << ',' << r.idfn << '\n';
}

}  // namespace mtmc::io
