#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "rsl/core/types.hpp"
#include "rsl/odom.hpp"
#include "rsl/osmloc.hpp"
#include "rsl/preprocess.hpp"
#include "rsl/project.hpp"
#include "rsl/radarproc.hpp"
#include "rsl/refine.hpp"
#include "rsl/synthworld.hpp"

namespace rsl::pipeline {

namespace fs = std::filesystem;

/// Thrown for configs that fail validation (exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SynthConfig {
  bool enabled = false;
  std::optional<synth::SceneSpec> scene;  // explicit scene; otherwise a city block
  double block_side = 75.0;                // path meters per side of the city block
  synth::TrajectorySpec trajectory;
  bool trajectory_from_block = true;
  synth::LidarSpec lidar;
  synth::RadarNoiseSpec radar_noise;
  synth::CorruptionSpec corruption;
  std::size_t lidar_every = 0;  // simulate LiDAR on every n-th frame; 0 = never
  osm::GeoOrigin origin{48.1351, 11.5820};
};

struct PreprocessConfig {
  bool enabled = false;
  preprocess::Extrinsic extrinsic;
  preprocess::FovSpec fov;
  preprocess::GroundParams ground;
  preprocess::LabelMap16to4 label_map = preprocess::LabelMap16to4::defaults();
  bool remove_ground = true;
};

struct StageToggle {
  bool enabled = false;
};

struct OdomConfig {
  bool enabled = false;
  odom::OdometryParams params;
  /// "masks": the sequence rasters (synthetic truth or inputs.raster_dir); "none".
  std::string raster_source = "masks";
};

struct LocateConfig {
  bool enabled = false;
  osm::LocConfig params;
  std::optional<fs::path> map_path;  // default: the synthesized map
};

struct EvalConfig {
  bool enabled = false;
  std::vector<double> lengths = {10, 20, 30, 40, 50, 60, 70, 80};
  bool plots = true;
};

struct InputPaths {
  std::optional<fs::path> lidar_dir;   // .lpc with 16-way source ids
  std::optional<fs::path> radar_dir;   // .psc
  std::optional<fs::path> raster_dir;  // .crs masks for odometry
  std::optional<fs::path> ground_truth;
  std::optional<fs::path> imu;
};

struct ExperimentConfig {
  std::uint64_t seed = 0;
  fs::path output_dir = "out";
  int workers = 1;
  GridSpec grid{400, 160, 0.5};
  SynthConfig synth;
  PreprocessConfig preprocess;
  refine::RefineParams refine_params;
  StageToggle refine;
  project::WindowSpec window;
  StageToggle project;
  OdomConfig odom;
  LocateConfig locate;
  EvalConfig eval;
  InputPaths inputs;
  /// Defaults merged with the user's file: every parameter in effect.
  nlohmann::json effective;
};

/// Defaults for every field; user configs are merged over this.
nlohmann::json default_config();
/// Parses and validates. Relative paths resolve against `base_dir`.
/// Throws ConfigError.
ExperimentConfig parse_config(const nlohmann::json& user, const fs::path& base_dir = ".");
ExperimentConfig load_config(const fs::path& path);

struct ManifestEntry {
  std::string path;  // relative to the output directory
  std::string sha256;
  std::uintmax_t bytes = 0;
};

struct StageRecord {
  std::string name;
  std::string status;  // ok | failed | skipped
  std::vector<ManifestEntry> files;
  nlohmann::json summary;
};

struct Manifest {
  std::string status = "ok";
  std::vector<StageRecord> stages;
  std::optional<std::string> failed_stage;
  std::optional<std::string> failed_frame;
  std::optional<std::string> error;
  nlohmann::json config;

  nlohmann::json to_json() const;
};

std::string sha256_hex(const std::vector<std::uint8_t>& bytes);
std::string sha256_file(const fs::path& path);

/// Runs the enabled stages in order: synth, preprocess, refine, project,
/// odom, locate, eval. Writes manifest.json (also on failure) and returns it.
/// A failing stage stops the run; the manifest names the stage and frame.
Manifest run_pipeline(const ExperimentConfig& config);

/// In-memory radar sequence with optional masks and references.
struct Sequence {
  std::vector<PolarScan> scans;
  std::vector<ClassRaster> rasters;  // empty or one per scan
  Trajectory ground_truth;
  std::vector<ImuSample> imu;
  std::optional<synth::SceneSpec> scene;
};

/// Synthesizes the radar part of a sequence (scans, truth rasters, poses, IMU).
Sequence synthesize_sequence(const SynthConfig& synth, const GridSpec& grid, std::uint64_t seed);

/// Scans, rasters, gt and IMU from the configured source: the synthesizer
/// when enabled, otherwise the input directories.
Sequence load_sequence(const ExperimentConfig& config);

Trajectory run_odometry(const Sequence& seq, const odom::OdometryParams& params, bool use_rasters,
                        odom::RadarOdometry* state_out = nullptr);

struct AblationRow {
  radar::MaskMode mode = radar::MaskMode::NoneRemoved;
  bool imu = false;
  double translation_error = 0.0;
  double rotation_error = 0.0;
  double seconds = 0.0;
  bool best_translation = false;
  bool best_rotation = false;
};

struct AblationTable {
  std::vector<AblationRow> rows;
  std::vector<double> lengths;

  const AblationRow* best() const;  // minimum translation error
  std::string to_markdown() const;
  nlohmann::json to_json() const;
};

/// One odometry run per (mode, imu) cell over the same sequence, scored by
/// drift against ground truth. Throws ConfigError on an empty mode or imu list.
AblationTable ablation(const ExperimentConfig& config, const std::vector<radar::MaskMode>& modes,
                       const std::vector<bool>& imu);
AblationTable ablation(const Sequence& seq, const ExperimentConfig& config,
                       const std::vector<radar::MaskMode>& modes, const std::vector<bool>& imu);

}  // namespace rsl::pipeline
