#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Core>

#include "rsl/core/types.hpp"
#include "rsl/odom.hpp"
#include "rsl/radarproc.hpp"

namespace rsl::osm {

/// Origin of the local east/north tangent plane.
struct GeoOrigin {
  double lat_deg = 0.0;
  double lon_deg = 0.0;
};

/// Equirectangular projection about `origin`: (east, north) in meters.
Eigen::Vector2d to_local(double lat_deg, double lon_deg, const GeoOrigin& origin);
/// Inverse of to_local: (lat, lon) in degrees.
Eigen::Vector2d to_geo(const Eigen::Vector2d& local, const GeoOrigin& origin);

struct WallSegment {
  Eigen::Vector2d a = Eigen::Vector2d::Zero();
  Eigen::Vector2d b = Eigen::Vector2d::Zero();
  std::size_t wall_id = 0;
  std::int64_t building_id = 0;

  double length() const { return (b - a).norm(); }
  /// Unit normal to the right of a->b; outward for counter-clockwise polygons.
  Eigen::Vector2d normal() const;
  /// Closest point on the segment.
  Eigen::Vector2d project(const Eigen::Vector2d& p) const;
};

/// Closed ways tagged building=* become wall segments, one per consecutive
/// vertex pair, wound counter-clockwise. Ways that reference a missing node
/// are rejected (InputError naming the way); other ways are skipped.
std::vector<WallSegment> parse_osm(const std::string& xml, const GeoOrigin& origin);

/// Inverse of parse_osm for building polygons given in local coordinates.
std::string write_osm(const std::vector<std::vector<Eigen::Vector2d>>& buildings,
                      const GeoOrigin& origin);

struct SegmentHit {
  std::size_t wall = 0;  // index into walls()
  Eigen::Vector2d projection = Eigen::Vector2d::Zero();
  double distance = 0.0;
};

/// Immutable wall index with a uniform bucket grid.
class BuildingMap {
 public:
  explicit BuildingMap(std::vector<WallSegment> walls, double max_gate = 5.0,
                       double bucket_size = 10.0);

  /// Nearest wall within `gate` whose normal is within the angular tolerance
  /// of `normal` (unsigned).
  std::optional<SegmentHit> nearest(const Eigen::Vector2d& p, const Eigen::Vector2d& normal,
                                    double gate, double min_abs_cos) const;
  const std::vector<WallSegment>& walls() const { return walls_; }
  double max_gate() const { return max_gate_; }

 private:
  std::int64_t bucket_key(std::int64_t bx, std::int64_t by) const;

  std::vector<WallSegment> walls_;
  double max_gate_;
  double bucket_;
  std::unordered_map<std::int64_t, std::vector<std::uint32_t>> buckets_;
};

enum class Side { Left, Right };

struct WallTrack {
  std::size_t wall_id = 0;
  double weight = 1.0;
  Side expected_side = Side::Left;
  std::size_t unseen_frames = 0;
};

using WallTracks = std::map<std::size_t, WallTrack>;

struct TrackParams {
  double alpha_up = 1.2;
  double alpha_down = 0.5;
  double decay = 0.9;
  double w_min = 0.2;
  double w_max = 3.0;
  /// |cross| below this (meters) is ambiguous: no side update.
  double ambiguous_distance = 0.2;
};

struct LocState {
  Pose2 mean;
  Eigen::Matrix3d covariance = Eigen::Matrix3d::Identity();
};

struct MapMatch {
  std::size_t feature = 0;
  std::size_t wall_id = 0;
  Eigen::Vector2d point = Eigen::Vector2d::Zero();       // registered, map frame
  Eigen::Vector2d projection = Eigen::Vector2d::Zero();  // on the wall
  double residual = 0.0;
  double weight = 1.0;
};

struct MapRegisterParams {
  double gate = 3.0;
  double max_normal_angle = 0.5235987755982988;  // 30 deg
  double huber_delta = 0.3;
  std::size_t max_iterations = 20;
  double step_tolerance = 1e-6;
  std::size_t min_matches = 10;
  double max_condition = 1e4;
};

struct MapRegistration {
  /// Body-frame correction: registered = state.mean * correction.
  Pose2 correction;
  Pose2 registered;
  std::vector<MapMatch> matches;
  Eigen::Matrix3d information = Eigen::Matrix3d::Zero();
  double condition = 0.0;
  bool rank_deficient = false;
  bool confident = false;
  std::size_t iterations = 0;
};

/// Signed side of `point` relative to a vehicle at `pose`: cross(heading, point - position).
double side_cross(const Pose2& pose, const Eigen::Vector2d& point);

/// Iteratively reweighted point-to-wall registration of building features
/// (sensor frame) starting at state.mean. Each match's weight is the Huber
/// weight times its wall's track weight, times alpha_down when the match
/// sits on the side opposite to the track's expectation.
MapRegistration register_to_map(std::span<const odom::OrientedSurfacePoint> features,
                                const BuildingMap& map, const WallTracks& tracks,
                                const LocState& state, const MapRegisterParams& params = {},
                                const TrackParams& track_params = {});

/// Matched walls: x alpha_up on the expected side, x alpha_down on the wrong
/// side, enter at 1 with the observed side when new. Unmatched tracks decay
/// toward 1. Weights stay within [w_min, w_max].
WallTracks update_wall_tracks(const WallTracks& tracks, std::span<const MapMatch> matches,
                              const Pose2& pose, const TrackParams& params = {});

/// Predict with an odometry increment; when `measured` is given, a Kalman
/// update with that absolute pose (H = I). Non-PSD covariances throw.
LocState ekf_step(const LocState& state, const Pose2& odom_delta, const Eigen::Matrix3d& odom_cov,
                  const std::optional<Pose2>& measured, const Eigen::Matrix3d& measured_cov);

struct LocConfig {
  std::size_t k = 12;
  float min_power = 0.0f;
  std::uint32_t mask_dilation = 1;
  odom::OspParams osp;
  MapRegisterParams registration;
  TrackParams tracks;
  bool use_map = true;
  Pose2 initial_pose;
  Eigen::Matrix3d initial_cov = Eigen::Vector3d(0.25, 0.25, 0.0003).asDiagonal();
  /// Odometry noise per frame (x, y, theta standard deviations).
  Eigen::Vector3d odom_sigma = Eigen::Vector3d(0.05, 0.05, 0.002);
  /// Map fix noise (x, y, theta standard deviations).
  Eigen::Vector3d fix_sigma = Eigen::Vector3d(0.15, 0.15, 0.005);
  double time_tolerance = 0.05;
};

struct LocFrame {
  PolarScan scan;
  std::optional<ClassRaster> raster;
};

struct LocFrameReport {
  double timestamp = 0.0;
  std::size_t features = 0;
  std::size_t matches = 0;
  bool confident = false;
  bool rank_deficient = false;
  double condition = 0.0;
  std::optional<double> position_error;
};

struct LocResult {
  Trajectory estimate;
  std::vector<LocFrameReport> frames;
  std::optional<double> ape;
  std::optional<double> final_error;

  std::string report_json() const;
};

/// Per frame: building mask, surface points, map registration, track update,
/// EKF fusion with the odometry increment.
LocResult localize_sequence(std::span<const LocFrame> frames, const Trajectory& odometry,
                            const BuildingMap& map, const LocConfig& config,
                            const Trajectory* ground_truth = nullptr);

}  // namespace rsl::osm
