#pragma once

#include <Eigen/Core>

namespace rsl {

/// Wraps an angle into (-pi, pi].
double normalize_angle(double angle);

/// Planar rigid pose. theta is kept in (-pi, pi] by every operation below.
struct Pose2 {
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;

  static Pose2 identity() { return {}; }
  static Pose2 make(double x, double y, double theta) {
    return {x, y, normalize_angle(theta)};
  }

  Eigen::Matrix2d rotation() const;
  Eigen::Vector2d translation() const { return {x, y}; }
};

/// a then b, i.e. T_a * T_b.
Pose2 compose(const Pose2& a, const Pose2& b);
Pose2 inverse(const Pose2& p);
/// R(theta) * pt + t
Eigen::Vector2d apply(const Pose2& p, const Eigen::Vector2d& pt);
/// Relative motion from a to b expressed in a's frame: inverse(a) * b.
Pose2 between(const Pose2& a, const Pose2& b);

inline Pose2 operator*(const Pose2& a, const Pose2& b) { return compose(a, b); }

}  // namespace rsl
