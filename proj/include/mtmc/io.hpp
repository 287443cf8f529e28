#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mtmc/config.hpp"
#include "mtmc/metrics.hpp"
#include "mtmc/synthgen.hpp"
#include "mtmc/types.hpp"

// Text formats. Every writer uses fixed six-digit decimals and a stable line
// order, so identical inputs give byte-identical files.
namespace mtmc::io {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string format_decimal(double value);

// Detections: "camera,frame,left,top,right,bottom,confidence" per line.
std::vector<Detection> parse_detections(std::istream& in);
std::vector<Detection> parse_detections(const std::filesystem::path& path);
void write_detections(std::ostream& out, std::span<const Detection> detections);

// Features: header "d=<dimension>", then one comma-separated row per
// detection, paired with the detection file by position.
std::vector<FeatureVector> parse_features(std::istream& in, std::size_t expected_count);
std::vector<FeatureVector> parse_features(const std::filesystem::path& path, std::size_t expected_count);
void write_features(std::ostream& out, std::span<const Detection> detections);

// Trajectories: "identity,camera,frame,left,top,right,bottom,interpolated"
// sorted by (identity, camera, frame). Features are not stored. Parsing
// splits each (identity, camera) into maximal runs of consecutive frames.
void write_trajectories(std::ostream& out, std::span<const IdentityCluster> clusters);
void write_trajectories(const std::filesystem::path& path, std::span<const IdentityCluster> clusters);
std::string trajectories_to_string(std::span<const IdentityCluster> clusters);
std::vector<IdentityCluster> parse_trajectories(std::istream& in);
std::vector<IdentityCluster> parse_trajectories(const std::filesystem::path& path);

// Flat "key = value" files; '#' starts a comment. Missing keys keep their
// defaults; unknown keys are rejected.
PipelineConfig parse_config(std::istream& in);
PipelineConfig parse_config(const std::filesystem::path& path);
void write_config(std::ostream& out, const PipelineConfig& config);

synth::WorldConfig parse_world_config(std::istream& in);
synth::WorldConfig parse_world_config(const std::filesystem::path& path);
void write_world_config(std::ostream& out, const synth::WorldConfig& world);

synth::NoiseConfig parse_noise_config(std::istream& in);
synth::NoiseConfig parse_noise_config(const std::filesystem::path& path);
void write_noise_config(std::ostream& out, const synth::NoiseConfig& noise);

// Reports: key-value block, and a CSV header plus one row.
void write_report(std::ostream& out, const metrics::IdMetricsReport& report);
metrics::IdMetricsReport parse_report(std::istream& in);
void write_report_row(std::ostream& out, const metrics::IdMetricsReport& report, bool with_header = true);

}  // namespace mtmc::io
