#pragma once

#include <cstddef>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "rsl/core/types.hpp"
#include "rsl/radarproc.hpp"

namespace rsl::odom {

/// Mean and unit normal of the returns in one grid cell.
struct OrientedSurfacePoint {
  Eigen::Vector2d mean = Eigen::Vector2d::Zero();
  Eigen::Vector2d normal = Eigen::Vector2d::UnitX();
  double weight = 0.0;  // member count
};

struct OspParams {
  double cell_size = 3.0;
  std::size_t min_cell_points = 4;
  /// Cells whose covariance eigenvalue ratio (large/small) is below this are
  /// too round to carry a direction and are skipped.
  double min_eigen_ratio = 1.5;
};

/// Grid-cell surface points. Normals point toward the sensor origin.
std::vector<OrientedSurfacePoint> compute_osp(std::span<const Eigen::Vector2d> points,
                                              const OspParams& params = {});
std::vector<OrientedSurfacePoint> compute_osp(const radar::RadarPointSet& points,
                                              const OspParams& params = {});

struct Keyframe {
  Pose2 pose;  // odometry frame
  std::vector<OrientedSurfacePoint> features;  // keyframe sensor frame
};

/// Bounded FIFO of keyframes; the oldest is evicted past capacity.
class KeyframeBuffer {
 public:
  explicit KeyframeBuffer(std::size_t capacity = 10);

  void push(Keyframe kf);
  bool empty() const { return frames_.empty(); }
  std::size_t size() const { return frames_.size(); }
  std::size_t capacity() const { return capacity_; }
  const Keyframe& back() const { return frames_.back(); }
  const std::deque<Keyframe>& frames() const { return frames_; }
  void clear() { frames_.clear(); }

 private:
  std::size_t capacity_;
  std::deque<Keyframe> frames_;
};

struct RegistrationParams {
  double huber_delta = 0.1;
  double match_radius = 2.0;
  /// Matches need |n_src . n_target| >= cos(max_normal_angle).
  double max_normal_angle = 0.7853981633974483;
  std::size_t max_iterations = 50;
  double step_tolerance = 1e-6;
  std::size_t min_matches = 3;
};

/// Soft penalty 0.5 * weight * (theta - theta_prior)^2 on the absolute heading.
struct YawPrior {
  double theta = 0.0;
  double weight = 0.0;
};

struct RegistrationResult {
  Pose2 pose;
  bool converged = false;
  bool diverged = false;  // too few matches; pose is the guess
  double residual = 0.0;  // RMS point-to-line distance of final matches, meters
  std::size_t matches = 0;
  std::size_t iterations = 0;
  /// (cost before, cost after) of each accepted step under its associations.
  std::vector<std::pair<double, double>> cost_trace;
};

/// One correspondence: a source point and the target line it is matched to.
struct PointToLine {
  Eigen::Vector2d source = Eigen::Vector2d::Zero();
  Eigen::Vector2d target_mean = Eigen::Vector2d::Zero();
  Eigen::Vector2d target_normal = Eigen::Vector2d::UnitX();
};

/// n^T (R(theta) p + t - m)
double point_to_line_residual(const Pose2& pose, const PointToLine& c);
/// d residual / d (x, y, theta)
Eigen::RowVector3d point_to_line_jacobian(const Pose2& pose, const PointToLine& c);

double huber_loss(double r, double delta);
double huber_weight(double r, double delta);

/// Robust Gauss-Newton alignment of `source` (sensor frame) against the
/// features of every buffered keyframe, starting from `guess` (odometry
/// frame). Associations are refreshed each iteration; a step that raises the
/// cost is halved until it does not.
RegistrationResult register_scan(std::span<const OrientedSurfacePoint> source,
                                 const KeyframeBuffer& buffer, const Pose2& guess,
                                 const RegistrationParams& params = {},
                                 const std::optional<YawPrior>& prior = std::nullopt);

/// Trapezoidal integral of yaw rate over [t0, t1]. Throws InputError when the
/// samples leave a gap wider than `max_gap` seconds.
double integrate_imu_yaw(std::span<const ImuSample> samples, double t0, double t1,
                         double max_gap = 0.1);

struct OdometryParams {
  std::size_t k = 12;
  float min_power = 0.0f;
  radar::MaskMode mode = radar::MaskMode::NoneRemoved;
  std::uint32_t mask_dilation = 1;
  OspParams osp;
  RegistrationParams registration;
  std::size_t keyframes = 10;
  double keyframe_distance = 1.5;
  double keyframe_angle = 0.08726646259971647;  // 5 deg
  bool use_imu = false;
  /// Weight of the soft IMU heading penalty; 0 uses the IMU only as initial guess.
  double imu_prior_weight = 0.0;
  Pose2 initial_pose;
};

struct FrameReport {
  double timestamp = 0.0;
  std::size_t radar_points = 0;
  std::size_t features = 0;
  std::size_t matches = 0;
  std::size_t iterations = 0;
  double residual = 0.0;
  bool converged = false;
  bool diverged = false;
  bool keyframe = false;
};

/// Single-sequence odometry state, advanced one scan at a time.
class RadarOdometry {
 public:
  explicit RadarOdometry(OdometryParams params);

  /// k-strongest -> semantic mask (when a raster is given) -> surface points
  /// -> constant-velocity guess (IMU yaw when available) -> registration ->
  /// keyframe admission. Returns the new absolute pose.
  Pose2 step(const PolarScan& scan, const ClassRaster* raster = nullptr,
             std::span<const ImuSample> imu = {});

  const Trajectory& trajectory() const { return trajectory_; }
  const std::vector<FrameReport>& reports() const { return reports_; }
  const KeyframeBuffer& keyframes() const { return buffer_; }
  const OdometryParams& params() const { return params_; }

  std::string report_json() const;

 private:
  OdometryParams params_;
  KeyframeBuffer buffer_;
  Trajectory trajectory_;
  std::vector<FrameReport> reports_;
  Pose2 last_delta_;
  double last_dt_ = 0.0;
};

}  // namespace rsl::odom
