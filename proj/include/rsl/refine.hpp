#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "rsl/core/types.hpp"

namespace rsl::refine {

/// Thresholds for both refinement passes. The ratios and counts are not
/// given upstream; defaults are tuned on the synthetic scenes.
struct RefineParams {
  double dbscan_eps = 0.8;
  std::size_t dbscan_min_pts = 8;
  std::size_t aabb_min_cluster = 30;
  double svd_radius = 1.0;
  std::size_t svd_min_points = 10;
  double line_ratio = 0.15;
  double plane_ratio = 0.15;

  void validate() const;
};

struct Aabb {
  Eigen::Vector3d min = Eigen::Vector3d::Zero();
  Eigen::Vector3d max = Eigen::Vector3d::Zero();

  bool contains(const Point3& p) const;
};

enum class StructureKind { Line, Plane, Scatter };

std::string_view to_string(StructureKind k);

struct DbscanResult {
  static constexpr int kNoise = -1;

  std::vector<int> labels;                       // cluster id or kNoise, per input point
  std::vector<std::vector<std::size_t>> clusters;  // ascending indices per cluster
  std::vector<std::size_t> noise;
  std::vector<bool> core;
};

/// Density clustering. Neighborhoods include the point itself; a point is
/// core when its eps-neighborhood holds at least min_pts points. Border points
/// go to the first cluster (in index-order expansion) that reaches them.
DbscanResult dbscan(std::span<const Point3> points, double eps, std::size_t min_pts);

/// Throws ContractViolation on an empty cluster.
Aabb compute_aabb(std::span<const Point3> points);
Aabb compute_aabb(std::span<const Point3> points, std::span<const std::size_t> members);

/// Building and Noise points inside the closed box become Vegetation.
/// Vehicle points are left alone. Returns the number of relabeled points.
std::size_t refine_vegetation_points(LabeledCloud& cloud, const Aabb& box);

/// All points within distance r (inclusive) of center, any label.
std::vector<std::size_t> search_near_points(const LabeledCloud& cloud, const Point3& center,
                                            double r);

/// Singular values of the mean-centered n x 3 coordinate matrix, descending.
/// Throws ContractViolation for fewer than 3 points.
std::array<double, 3> svd_singular_values(std::span<const Point3> points);
std::array<double, 3> svd_singular_values(std::span<const Point3> points,
                                          std::span<const std::size_t> members);

/// Line if s2/s1 <= line_ratio, else Plane if s3/s2 <= plane_ratio, else Scatter.
StructureKind assess_structure(double s1, double s2, double s3, const RefineParams& params);

struct RefineReport {
  std::size_t vegetation_clusters = 0;
  std::size_t boxes = 0;
  std::size_t pass1_relabels = 0;
  std::size_t pass2_queries = 0;
  std::size_t pass2_structured = 0;
  std::size_t pass2_relabels = 0;
  /// (pass, from, to) -> count
  std::map<std::pair<int, std::pair<SemanticClass, SemanticClass>>, std::size_t> transitions;

  std::string to_json() const;
};

/// Two passes, in order:
///  1. cluster Vegetation points, box each large-enough cluster, absorb
///     Building/Noise points inside the box into Vegetation;
///  2. for every Vegetation point left, take its radius neighborhood over the
///     whole cloud; if it is a line or a plane, all Vegetation members of the
///     neighborhood become Building (decided first, written in one batch).
/// Geometry, count and order are never touched.
LabeledCloud refine_labels(const LabeledCloud& cloud, const RefineParams& params,
                           RefineReport* report = nullptr);

RefineParams params_from_json(const std::string& text);

}  // namespace rsl::refine
