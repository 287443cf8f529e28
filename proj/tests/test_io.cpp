#include <random>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "mtmc/io.hpp"

using namespace mtmc;
using namespace mtmc::io;
using fixtures::box;
using fixtures::box_at;
using fixtures::cluster;
using fixtures::point;
using fixtures::still;

namespace {

template <typename F>
auto parse(const std::string& text, F f) {
    std::istringstream in(text);
    return f(in);
}

}  // namespace

TEST_CASE("format_decimal") {
    CHECK(format_decimal(0.5) == "0.500000");
    CHECK(format_decimal(-1.25) == "-1.250000");
    CHECK(format_decimal(1e-7) == "0.000000");
    CHECK(format_decimal(123456.7890123) == "123456.789012");
}

TEST_CASE("detections") {
    const auto d = parse("1,5,10.0,20.0,50.0,120.0,0.97\n", [](auto& in) { return parse_detections(in); });
    REQUIRE(d.size() == 1);
    CHECK(d[0].camera == 1);
    CHECK(d[0].frame == 5);
    CHECK(d[0].box == box(10, 20, 50, 120));
    CHECK(d[0].confidence == 0.97);
    CHECK(d[0].feature.empty());

    CHECK(parse("", [](auto& in) { return parse_detections(in); }).empty());
    CHECK_THROWS_AS(parse("1,5,50,20,10,120,0.9\n", [](auto& in) { return parse_detections(in); }), ParseError);
    CHECK_THROWS_WITH_AS(parse("1,5,10,20,50,120,0.9\n1,x,10,20,50,120,0.9\n",
                               [](auto& in) { return parse_detections(in); }),
                         doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_WITH_AS(parse("1,5,10,20,50\n", [](auto& in) { return parse_detections(in); }),
                         doctest::Contains("7"), ParseError);

    std::ostringstream out;
    write_detections(out, d);
    CHECK(out.str() == "1,5,10.000000,20.000000,50.000000,120.000000,0.970000\n");
}

TEST_CASE("features") {
    const auto f = parse("d=2\n0.0,1.0\n1.0,0.0\n", [](auto& in) { return parse_features(in, 2); });
    REQUIRE(f.size() == 2);
    CHECK(f[0] == FeatureVector{0.0, 1.0});
    CHECK(f[1] == FeatureVector{1.0, 0.0});
    CHECK_THROWS_AS(parse("d=2\n0.0,1.0\n1.0,0.0\n", [](auto& in) { return parse_features(in, 3); }), ParseError);
    CHECK_THROWS_WITH_AS(parse("d=2\nnan,1.0\n", [](auto& in) { return parse_features(in, 1); }),
                         doctest::Contains("non-finite"), ParseError);
    CHECK_THROWS_AS(parse("d=2\n1.0\n", [](auto& in) { return parse_features(in, 1); }), ParseError);
    CHECK_THROWS_AS(parse("0.0,1.0\n", [](auto& in) { return parse_features(in, 1); }), ParseError);

    std::vector<Detection> dets(2);
    dets[0].feature = {0.25, -1.0};
    dets[1].feature = {3.0, 0.0};
    std::ostringstream out;
    write_features(out, dets);
    CHECK(out.str() == "d=2\n0.250000,-1.000000\n3.000000,0.000000\n");
}

TEST_CASE("trajectories") {
    auto gap = point(3, box(1, 0, 11, 10));
    gap.interpolated = true;
    const std::vector<IdentityCluster> clusters{
        cluster(2, {Trajectory(1, {point(2, box(0, 0, 10, 10)), gap, point(4, box(2, 0, 12, 10))})}),
        cluster(1, {still(3, 7, 7, box_at(0, 0), {0.0})})};
    const auto text = trajectories_to_string(clusters);
    CHECK(text ==
          "1,3,7,0.000000,0.000000,10.000000,20.000000,0\n"
          "2,1,2,0.000000,0.000000,10.000000,10.000000,0\n"
          "2,1,3,1.000000,0.000000,11.000000,10.000000,1\n"
          "2,1,4,2.000000,0.000000,12.000000,10.000000,0\n");

    const auto back = parse(text, [](auto& in) { return parse_trajectories(in); });
    REQUIRE(back.size() == 2);
    CHECK(back[0].identity == 1);
    CHECK(back[1].members.size() == 1);
    CHECK(back[1].members[0].points()[1].interpolated);
    CHECK(trajectories_to_string(back) == text);

    SUBCASE("non-consecutive frames split into runs") {
        const auto split = parse("5,1,0,0,0,1,1,0\n5,1,1,0,0,1,1,0\n5,1,9,0,0,1,1,0\n5,2,9,0,0,1,1,0\n",
                                 [](auto& in) { return parse_trajectories(in); });
        REQUIRE(split.size() == 1);
        CHECK(split[0].members.size() == 3);
    }
    SUBCASE("duplicates are rejected on both sides") {
        CHECK_THROWS_AS(parse("5,1,0,0,0,1,1,0\n5,1,0,0,0,2,2,0\n", [](auto& in) { return parse_trajectories(in); }),
                        ParseError);
        const std::vector<IdentityCluster> dup{
            cluster(1, {still(1, 0, 3, box_at(0, 0), {0.0}), still(1, 3, 5, box_at(0, 0), {0.0})})};
        CHECK_THROWS_AS(trajectories_to_string(dup), ValidationError);
    }
    SUBCASE("a run needs an observed point") {
        CHECK_THROWS_AS(parse("5,1,0,0,0,1,1,1\n", [](auto& in) { return parse_trajectories(in); }), ParseError);
    }
}

TEST_CASE("random trajectory sets round-trip") {
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 100; ++trial) {
        const auto first = trajectories_to_string(fixtures::random_clusters(rng));
        const auto parsed = parse(first, [](auto& in) { return parse_trajectories(in); });
        CHECK(trajectories_to_string(parsed) == first);
    }
}

TEST_CASE("pipeline config") {
    CHECK(parse("", [](auto& in) { return parse_config(in); }) == PipelineConfig{});

    PipelineConfig expected;
    expected.iou_gate = 0.5;
    CHECK(parse("iou_gate = 0.5\n", [](auto& in) { return parse_config(in); }) == expected);

    CHECK_THROWS_WITH_AS(parse("bogus = 1\n", [](auto& in) { return parse_config(in); }), doctest::Contains("bogus"),
                         ParseError);
    CHECK_THROWS_AS(parse("iou_gate = 1.5\n", [](auto& in) { return parse_config(in); }), ParseError);
    CHECK_THROWS_AS(parse("window_frames = 2.5\n", [](auto& in) { return parse_config(in); }), ParseError);

    const auto c = parse("# comment\n  overlapping_camera_pairs = 1-2 4-3 \nsct_threshold = 0.7 # trailing\n",
                         [](auto& in) { return parse_config(in); });
    CHECK(c.overlapping_camera_pairs == std::set<CameraPair>{{1, 2}, {3, 4}});
    CHECK(c.sct_threshold == 0.7);

    PipelineConfig custom;
    custom.sct_threshold = 0.8;
    custom.rerank_k1 = 7;
    custom.mct_merge_threshold = 0.25;
    custom.normalize_features = true;
    custom.overlapping_camera_pairs = {{1, 9}};
    std::ostringstream out;
    write_config(out, custom);
    CHECK(parse(out.str(), [](auto& in) { return parse_config(in); }) == custom);
}

TEST_CASE("world and noise configs round-trip") {
    synth::WorldConfig w;
    w.seed = 77;
    w.transitions = {{1, 2, -10, -3}, {2, 1, -10, -3}, {2, 3, 40, 90}, {3, 2, 40, 90}, {1, 3, 50, 60}, {3, 1, 50, 60}};
    std::ostringstream out;
    write_world_config(out, w);
    CHECK(parse(out.str(), [](auto& in) { return parse_world_config(in); }) == w);
    CHECK(parse("", [](auto& in) { return parse_world_config(in); }) == synth::WorldConfig{});
    CHECK_THROWS_AS(parse("n_cameras = 0\n", [](auto& in) { return parse_world_config(in); }), ParseError);

    synth::NoiseConfig n;
    n.separation = 6.0;
    n.view_noise = 0.0;
    std::ostringstream nout;
    write_noise_config(nout, n);
    CHECK(parse(nout.str(), [](auto& in) { return parse_noise_config(in); }) == n);
}

TEST_CASE("reports") {
    const auto r = metrics::make_report(50, 50, 50);
    std::ostringstream out;
    write_report(out, r);
    CHECK(out.str() == "idf1 = 0.500000\nidp = 0.500000\nidr = 0.500000\nidtp = 50\nidfp = 50\nidfn = 50\n");
    CHECK(parse(out.str(), [](auto& in) { return parse_report(in); }) == r);
    CHECK_THROWS_AS(parse("idf1 = 0.9\nidtp = 50\nidfp = 50\nidfn = 50\n", [](auto& in) { return parse_report(in); }),
                    ParseError);
    CHECK_THROWS_AS(parse("idtp = 50\n", [](auto& in) { return parse_report(in); }), ParseError);

    std::ostringstream row;
    write_report_row(row, r);
    CHECK(row.str() == "idf1,idp,idr,idtp,idfp,idfn\n0.500000,0.500000,0.500000,50,50,50\n");
}
