// Command-line front end: preprocess, track, evaluate, synth.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "mtmc/geometry.hpp"
#include "mtmc/io.hpp"
#include "mtmc/metrics.hpp"
#include "mtmc/pipeline.hpp"
#include "mtmc/synthgen.hpp"

namespace fs = std::filesystem;

namespace {

int verbosity = 0;

void log(int level, const std::string& message) {
    if (verbosity >= level) std::cerr << message << '\n';
}

mtmc::PipelineConfig load_config(const std::string& path) {
    if (path.empty()) return {};
    return mtmc::io::parse_config(fs::path(path));
}

std::ofstream open_output(const fs::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    return out;
}

struct PreprocessArgs {
    std::string detections, features, config, out, features_out;
};

void run_preprocess(const PreprocessArgs& a) {
    const auto config = load_config(a.config);
    auto detections = mtmc::io::parse_detections(fs::path(a.detections));
    const bool with_features = !a.features.empty();
    if (with_features) {
        mtmc::attach_features(detections, mtmc::io::parse_features(fs::path(a.features), detections.size()));
    }
    const auto kept =
        mtmc::preprocess_detections(detections, config.detection_confidence_threshold, config.nms_iou_threshold);
    auto out = open_output(a.out);
    mtmc::io::write_detections(out, kept);
    if (with_features) {
        if (a.features_out.empty()) throw std::runtime_error("--features requires --features-out");
        auto fout = open_output(a.features_out);
        mtmc::io::write_features(fout, kept);
    }
    std::cout << "before = " << detections.size() << '\n' << "after = " << kept.size() << '\n';
}

struct TrackArgs {
    std::string detections, features, config, out;
    bool sct_only = false;
    unsigned jobs = 0;
};

void run_track(const TrackArgs& a) {
    const auto config = load_config(a.config);
    auto detections = mtmc::io::parse_detections(fs::path(a.detections));
    mtmc::attach_features(detections, mtmc::io::parse_features(fs::path(a.features), detections.size()));
    const unsigned jobs = a.jobs > 0 ? a.jobs : std::max(1u, std::thread::hardware_concurrency());
    log(1, "tracking " + std::to_string(detections.size()) + " detections with " + std::to_string(jobs) + " jobs");

    const auto start = std::chrono::steady_clock::now();
    const auto result = mtmc::run_pipeline(detections, config, a.sct_only, jobs);
    const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    log(1, "pipeline finished in " + std::to_string(elapsed) + " s, " + std::to_string(result.merges.size()) +
               " cross-trajectory merges");

    mtmc::io::write_trajectories(fs::path(a.out), result.identities);
    for (const auto& [camera, count] : result.trajectories_per_camera) {
        std::cout << "camera " << camera << " trajectories = " << count << '\n';
    }
    std::cout << "identities = " << result.identities.size() << '\n';
}

struct EvaluateArgs {
    std::string gt, hyp, row;
};

void run_evaluate(const EvaluateArgs& a) {
    const auto gt = mtmc::io::parse_trajectories(fs::path(a.gt));
    const auto hyp = mtmc::io::parse_trajectories(fs::path(a.hyp));
    const auto report = mtmc::metrics::id_measures(gt, hyp);
    mtmc::io::write_report(std::cout, report);
    if (!a.row.empty()) {
        auto out = open_output(a.row);
        mtmc::io::write_report_row(out, report);
    }
}

struct SynthArgs {
    std::string world, noise, out_dir;
    std::uint64_t seed = 1;
};

void run_synth(const SynthArgs& a) {
    auto world = a.world.empty() ? mtmc::synth::WorldConfig{} : mtmc::io::parse_world_config(fs::path(a.world));
    const auto noise = a.noise.empty() ? mtmc::synth::NoiseConfig{} : mtmc::io::parse_noise_config(fs::path(a.noise));
    world.seed = a.seed;
    const auto gt = mtmc::synth::generate_world(world);
    const auto rendered = mtmc::synth::render_detections(gt, world, noise, a.seed);

    const fs::path dir(a.out_dir);
    fs::create_directories(dir);
    {
        auto out = open_output(dir / "detections.txt");
        mtmc::io::write_detections(out, rendered.detections);
    }
    {
        auto out = open_output(dir / "features.txt");
        mtmc::io::write_features(out, rendered.detections);
    }
    mtmc::io::write_trajectories(dir / "gt.txt", gt);
    {
        auto out = open_output(dir / "labels.txt");
        for (const auto& label : rendered.labels) out << (label ? *label : 0) << '\n';
    }
    log(1, "wrote " + std::to_string(rendered.detections.size()) + " detections for " + std::to_string(gt.size()) +
               " identities to " + dir.string());
    std::cout << "identities = " << gt.size() << '\n' << "detections = " << rendered.detections.size() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multi-target, multi-camera tracking by hierarchical clustering"};
    app.require_subcommand(1);
    app.add_flag("-v,--verbose", verbosity, "Increase log verbosity (repeatable)");

    PreprocessArgs pre;
    auto* cmd_pre = app.add_subcommand("preprocess", "Confidence filter and per-frame NMS");
    cmd_pre->add_option("--detections", pre.detections, "Detection file")->required()->check(CLI::ExistingFile);
    cmd_pre->add_option("--config", pre.config, "Pipeline config file")->check(CLI::ExistingFile);
    cmd_pre->add_option("--out", pre.out, "Output detection file")->required();
    cmd_pre->add_option("--features", pre.features, "Feature file paired with --detections")->check(CLI::ExistingFile);
    cmd_pre->add_option("--features-out", pre.features_out, "Output feature file for the kept detections");

    TrackArgs track;
    auto* cmd_track = app.add_subcommand("track", "Single-camera tracking and multi-camera association");
    cmd_track->add_option("--detections", track.detections, "Preprocessed detection file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd_track->add_option("--features", track.features, "Feature file")->required()->check(CLI::ExistingFile);
    cmd_track->add_option("--config", track.config, "Pipeline config file")->check(CLI::ExistingFile);
    cmd_track->add_option("--out", track.out, "Output trajectory file")->required();
    cmd_track->add_flag("--sct-only", track.sct_only, "Skip multi-camera association");
    cmd_track->add_option("--jobs", track.jobs, "Worker threads for per-camera tracking (default: all cores)");

    EvaluateArgs eval;
    auto* cmd_eval = app.add_subcommand("evaluate", "IDF1 / IDP / IDR of a hypothesis against ground truth");
    cmd_eval->add_option("--gt", eval.gt, "Ground-truth trajectory file")->required()->check(CLI::ExistingFile);
    cmd_eval->add_option("--hyp", eval.hyp, "Hypothesis trajectory file")->required()->check(CLI::ExistingFile);
    cmd_eval->add_option("--row", eval.row, "Also write a CSV header and row to this path");

    SynthArgs syn;
    auto* cmd_synth = app.add_subcommand("synth", "Generate a synthetic multi-camera scene");
    cmd_synth->add_option("--world", syn.world, "World config file")->check(CLI::ExistingFile);
    cmd_synth->add_option("--noise", syn.noise, "Noise config file")->check(CLI::ExistingFile);
    cmd_synth->add_option("--seed", syn.seed, "Random seed")->required();
    cmd_synth->add_option("--out-dir", syn.out_dir, "Output directory")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_pre) run_preprocess(pre);
        if (*cmd_track) run_track(track);
        if (*cmd_eval) run_evaluate(eval);
        if (*cmd_synth) run_synth(syn);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
