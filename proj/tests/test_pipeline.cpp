#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "mtmc/io.hpp"
#include "scenes.hpp"

namespace fs = std::filesystem;
using namespace mtmc;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / ("mtmc_test_" + name)) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

int cli(const std::string& args, const fs::path& stdout_file) {
    const std::string cmd = std::string("\"") + MTMC_CLI_PATH + "\" " + args + " > \"" + stdout_file.string() + "\" 2>&1";
    return std::system(cmd.c_str());
}

}  // namespace

TEST_CASE("attach and normalize features") {
    std::vector<Detection> dets(2);
    CHECK_THROWS_AS(attach_features(dets, {{1.0}}), ValidationError);
    CHECK_THROWS_AS(attach_features(dets, {{1.0}, {1.0, 2.0}}), ValidationError);
    attach_features(dets, {{3.0, 4.0}, {0.0, 0.0}});
    normalize_features(dets);
    CHECK(dets[0].feature == FeatureVector{0.6, 0.8});
    CHECK(dets[1].feature == FeatureVector{0.0, 0.0});
}

TEST_CASE("easy scene end to end") {
    const auto config = scenes::pipeline_config();
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const auto r = scenes::run(seed, scenes::easy_noise(), config);
        INFO("seed " << seed);
        CHECK(r.result.identities.size() == r.ground_truth.size());
        CHECK(r.report.idf1 >= 0.9);
    }
}

TEST_CASE("sct-only keeps every trajectory apart") {
    const auto r = scenes::run(2, scenes::easy_noise(), scenes::pipeline_config(), true);
    CHECK(r.result.identities.size() == r.result.trajectories.size());
    CHECK(r.result.merges.empty());
    std::size_t per_camera = 0;
    for (const auto& [camera, n] : r.result.trajectories_per_camera) per_camera += n;
    CHECK(per_camera == r.result.trajectories.size());
    for (const auto& c : r.result.identities) CHECK(c.members.size() == 1);
}

TEST_CASE("output does not depend on the worker count") {
    const auto config = scenes::pipeline_config();
    const auto base = scenes::run(5, scenes::easy_noise(), config);
    const auto one = run_pipeline(base.preprocessed, config, false, 1);
    const auto four = run_pipeline(base.preprocessed, config, false, 4);
    CHECK(io::trajectories_to_string(one.identities) == io::trajectories_to_string(four.identities));
}

TEST_CASE("trajectories only use preprocessed detections") {
    const auto r = scenes::run(8, scenes::easy_noise(), scenes::pipeline_config(), true);
    for (const auto& t : r.result.trajectories) {
        for (const auto& p : t.points()) {
            if (p.interpolated) continue;
            REQUIRE(p.source.has_value());
            CHECK(r.preprocessed[*p.source].frame == p.frame);
            CHECK(r.preprocessed[*p.source].camera == t.camera());
        }
    }
}

TEST_CASE("window size does not change a clean scene") {
    // One visit per identity and no misses, so every window size yields the
    // same identities.
    auto world = scenes::world(12);
    world.max_visits = 1;
    auto noise = scenes::easy_noise();
    noise.miss_rate = 0.0;
    noise.false_alarm_rate = 0.0;
    const auto gt = synth::generate_world(world);
    const auto rendered = synth::render_detections(gt, world, noise, 12);
    auto config = scenes::pipeline_config();
    std::set<std::size_t> counts;
    for (int window : {10, 25, 60, 150}) {
        config.window_frames = window;
        const auto result = run_pipeline(rendered.detections, config);
        counts.insert(result.identities.size());
        CHECK(metrics::id_measures(gt, result.identities).idf1 >= 0.99);
    }
    CHECK(counts == std::set<std::size_t>{gt.size()});
}

TEST_CASE("cli round trip") {
    TempDir dir("cli");
    const auto& d = dir.path;
    const auto out = d / "stdout.txt";

    {
        std::ofstream w(d / "world.txt");
        w << "n_identities = 4\nduration_s = 30\n";
        std::ofstream n(d / "noise.txt");
        n << "separation = 2.0\nfeature_noise = 0.5\n";
        std::ofstream c(d / "config.txt");
        c << "fps = 10\nmax_gap_frames = 600\noverlapping_camera_pairs = 1-2\n";
    }

    REQUIRE(cli("synth --world " + (d / "world.txt").string() + " --noise " + (d / "noise.txt").string() +
                    " --seed 3 --out-dir " + (d / "a").string(),
                out) == 0);
    REQUIRE(cli("synth --world " + (d / "world.txt").string() + " --noise " + (d / "noise.txt").string() +
                    " --seed 3 --out-dir " + (d / "b").string(),
                out) == 0);
    for (const char* f : {"detections.txt", "features.txt", "gt.txt", "labels.txt"}) {
        CHECK(slurp(d / "a" / f) == slurp(d / "b" / f));
    }

    REQUIRE(cli("preprocess --detections " + (d / "a" / "detections.txt").string() + " --features " +
                    (d / "a" / "features.txt").string() + " --config " + (d / "config.txt").string() + " --out " +
                    (d / "pre.txt").string() + " --features-out " + (d / "pre_f.txt").string(),
                out) == 0);
    CHECK(slurp(out).find("after = ") != std::string::npos);

    REQUIRE(cli("track --detections " + (d / "pre.txt").string() + " --features " + (d / "pre_f.txt").string() +
                    " --config " + (d / "config.txt").string() + " --jobs 2 --out " + (d / "hyp.txt").string(),
                out) == 0);
    CHECK(slurp(out).find("identities = 4") != std::string::npos);

    REQUIRE(cli("evaluate --gt " + (d / "a" / "gt.txt").string() + " --hyp " + (d / "a" / "gt.txt").string(), out) ==
            0);
    CHECK(slurp(out).find("idf1 = 1.000000") != std::string::npos);

    REQUIRE(cli("evaluate --gt " + (d / "a" / "gt.txt").string() + " --hyp " + (d / "hyp.txt").string() + " --row " +
                    (d / "row.csv").string(),
                out) == 0);
    CHECK(slurp(d / "row.csv").rfind("idf1,idp,idr,idtp,idfp,idfn\n", 0) == 0);

    SUBCASE("sct-only") {
        REQUIRE(cli("track --sct-only --detections " + (d / "pre.txt").string() + " --features " +
                        (d / "pre_f.txt").string() + " --config " + (d / "config.txt").string() + " --out " +
                        (d / "sct.txt").string(),
                    out) == 0);
        const auto text = slurp(out);
        CHECK(text.find("camera 1 trajectories = ") != std::string::npos);
    }
    SUBCASE("split identity fixture") {
        std::ofstream gt(d / "split_gt.txt"), hyp(d / "split_hyp.txt");
        for (int f = 0; f < 100; ++f) {
            gt << "1,1," << f << ",0,0,10,20,0\n";
            hyp << (f < 50 ? 7 : 8) << ",1," << f << ",0,0,10,20,0\n";
        }
        gt.close();
        hyp.close();
        REQUIRE(cli("evaluate --gt " + (d / "split_gt.txt").string() + " --hyp " + (d / "split_hyp.txt").string(),
                    out) == 0);
        CHECK(slurp(out).find("idf1 = 0.500000") != std::string::npos);
    }
    SUBCASE("empty detections") {
        std::ofstream(d / "empty.txt").close();
        std::ofstream(d / "empty_f.txt") << "d=4\n";
        REQUIRE(cli("track --detections " + (d / "empty.txt").string() + " --features " + (d / "empty_f.txt").string() +
                        " --out " + (d / "empty_out.txt").string(),
                    out) == 0);
        CHECK(slurp(d / "empty_out.txt").empty());
    }
    SUBCASE("errors exit nonzero") {
        CHECK(cli("preprocess --detections " + (d / "missing.txt").string() + " --out " + (d / "x.txt").string(), out) !=
              0);
        std::ofstream(d / "bad.txt") << "bogus = 1\n";
        CHECK(cli("preprocess --detections " + (d / "a" / "detections.txt").string() + " --config " +
                      (d / "bad.txt").string() + " --out " + (d / "x.txt").string(),
                  out) != 0);
        CHECK(slurp(out).find("bogus") != std::string::npos);
    }
}
