#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "rsl/core/types.hpp"

namespace rsl::synth {

/// Extruded rectangle.
struct BuildingSpec {
  Eigen::Vector2d center = Eigen::Vector2d::Zero();
  Eigen::Vector2d size = Eigen::Vector2d::Ones();  // along local x, y
  double yaw = 0.0;
  double height = 10.0;

  /// Footprint corners, counter-clockwise.
  std::vector<Eigen::Vector2d> footprint() const;
};

/// Tree: opaque trunk below a porous cylindrical crown. `density` is the
/// crown's extinction coefficient (1/m) for LiDAR rays.
struct VegetationSpec {
  Eigen::Vector2d center = Eigen::Vector2d::Zero();
  double radius = 2.0;
  double height = 6.0;
  double crown_base = 1.5;
  double trunk_radius = 0.2;
  double density = 0.8;
};

/// Box translating at constant velocity, heading along the velocity (or `yaw`
/// when parked).
struct VehicleSpec {
  Eigen::Vector2d start = Eigen::Vector2d::Zero();
  Eigen::Vector2d velocity = Eigen::Vector2d::Zero();
  double yaw = 0.0;
  double length = 4.5;
  double width = 1.8;
  double height = 1.6;
  /// Present only for t_begin <= t <= t_end.
  double t_begin = -1e9;
  double t_end = 1e9;

  bool active(double t) const { return t >= t_begin && t <= t_end; }
  Eigen::Vector2d position(double t) const { return start + velocity * t; }
  double heading() const;
  std::vector<Eigen::Vector2d> footprint(double t) const;
};

/// Square world [-extent, extent]^2.
struct SceneSpec {
  std::vector<BuildingSpec> buildings;
  std::vector<VegetationSpec> vegetation;
  std::vector<VehicleSpec> vehicles;
  double extent = 100.0;
  std::uint64_t seed = 0;

  /// Throws ContractViolation when a static shape leaves the extent or has a
  /// non-positive dimension.
  void validate() const;
  bool contains(const Eigen::Vector2d& p) const;
  std::string to_json() const;
  static SceneSpec from_json(const std::string& text);
};

struct CorruptionSpec {
  double building_to_vegetation_rate = 0.0;
  double vegetation_to_building_rate = 0.0;

  void validate() const;
};

struct LidarSpec {
  std::uint32_t beams = 32;
  double min_elevation = -0.4363323129985824;  // -25 deg
  double max_elevation = 0.17453292519943295;  // 10 deg
  double azimuth_step = 0.004363323129985824;  // 0.25 deg
  double max_range = 80.0;
  double range_noise = 0.02;  // Gaussian sigma, meters
  double mount_height = 1.8;
  bool include_ground = true;
};

/// Cloud in the sensor frame (origin at the LiDAR, x forward, z up).
/// `truth` holds the labels before corruption.
struct LidarFrame {
  LabeledCloud cloud;
  std::vector<SemanticClass> truth;
};

/// Flips are drawn from a stream keyed by (scene seed, stream id).
LidarFrame simulate_lidar(const SceneSpec& scene, const Pose2& pose, double time,
                          const LidarSpec& lidar, const CorruptionSpec& corruption,
                          std::uint64_t stream = 0);

/// i.i.d. label flips; `truth` is left as given.
void corrupt_labels(LidarFrame& frame, const CorruptionSpec& corruption, std::uint64_t seed);

struct RadarNoiseSpec {
  double noise_mean = 0.05;  // exponential floor
  double building_power = 1.0;
  double vehicle_power = 0.9;
  double vegetation_power = 0.35;
  std::uint32_t vegetation_min_bins = 3;
  std::uint32_t vegetation_max_bins = 6;
  /// Two-way attenuation per meter of crown crossed.
  double vegetation_extinction = 0.15;
  /// Multiplicative log-normal jitter of target returns.
  double speckle_sigma = 0.1;
};

/// 2-D ray cast per azimuth bin from the sensor at `pose`, 3-bin triangular
/// azimuth smear, exponential noise floor.
PolarScan simulate_radar(const SceneSpec& scene, const Pose2& pose, double time,
                         const GridSpec& grid, const RadarNoiseSpec& noise,
                         std::uint64_t stream = 0);

/// Noise-free class raster: a cell is set for a class when its center lies
/// within one range bin of that class's footprint.
ClassRaster radar_truth_raster(const SceneSpec& scene, const Pose2& pose, double time,
                               const GridSpec& grid);

enum class TrajectoryKind { Straight, SquareLoop, SCurve };

std::string_view to_string(TrajectoryKind k);
/// straight | square-loop | s-curve
std::optional<TrajectoryKind> parse_trajectory_kind(std::string_view text);

struct TrajectorySpec {
  TrajectoryKind kind = TrajectoryKind::Straight;
  double length = 100.0;  // meters of path
  double speed = 10.0;
  double dt = 0.25;
  double imu_rate = 100.0;  // Hz
  /// Square loop: arc length of each rounded corner.
  double corner_length = 15.0;
  /// S-curve: peak heading, radians.
  double s_curve_amplitude = 1.0471975511965976;
  Pose2 start;
};

struct GeneratedTrajectory {
  Trajectory poses;
  std::vector<ImuSample> imu;
};

/// Poses every dt over the path (arc-length parameterized at constant speed)
/// and yaw-rate samples at imu_rate, both from the analytic curvature.
GeneratedTrajectory generate_trajectory(const TrajectorySpec& spec);

/// Road: a counter-clockwise rounded square centered on the origin, `side`
/// meters of path per side, driven from the bottom-left heading east.
/// Buildings line both sides of the road with gaps; street trees and traffic
/// (a convoy keeping pace with the ego vehicle, oncoming and parked cars).
/// The seed varies the clutter, not the road.
SceneSpec city_block_scene(double side, std::uint64_t seed, double traffic_speed = 10.0);

/// Start pose and trajectory spec matching city_block_scene.
TrajectorySpec city_block_trajectory(double side, double speed, double dt);

std::vector<std::vector<Eigen::Vector2d>> building_footprints(const SceneSpec& scene);

/// Two parallel walls along x at y = +-half_width.
SceneSpec corridor_scene(double length, double half_width, std::uint64_t seed);

/// Deterministic 64-bit mix used to derive per-stream seeds.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

}  // namespace rsl::synth
