#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "rsl/core/io.hpp"
#include "rsl/core/types.hpp"

namespace rsl::preprocess {

/// LiDAR -> radar rigid transform.
struct Extrinsic {
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();

  /// Throws ContractViolation unless the rotation is orthonormal (1e-9) with det +1.
  void validate() const;
  static Extrinsic from_yaw(double yaw, const Eigen::Vector3d& translation);
};

/// Vertical field-of-view gate. The half angle has no library default: the
/// radar's vertical beam width is sensor specific and must come from config.
struct FovSpec {
  double half_angle = 0.0;  // radians, symmetric about the horizontal plane
  double min_range = 0.0;   // meters, 3-D distance from the radar origin
  double max_range = 0.0;

  void validate() const;
};

struct GroundParams {
  double cell_size = 1.0;
  double height_margin = 0.3;
  double percentile = 0.05;
};

/// Fixed 16-entry table from upstream source-class ids to the 4-way scheme.
class LabelMap16to4 {
 public:
  static constexpr std::size_t kSourceClasses = 16;

  LabelMap16to4() = default;
  /// The default taxonomy's names, indexed by source id.
  static const std::array<std::string_view, kSourceClasses>& default_source_names();
  /// Vehicles -> Vehicle, vegetation -> Vegetation, manmade -> Building,
  /// everything else (pedestrian, ground, barrier, cone...) -> Noise.
  static LabelMap16to4 defaults();
  /// JSON object {"<source id or name>": "Vehicle"|"Vegetation"|"Building"|"Noise"}.
  static LabelMap16to4 from_json(const std::string& text);

  void set(std::uint8_t source_id, SemanticClass c);
  std::optional<SemanticClass> lookup(std::uint8_t source_id) const;
  bool is_total() const;

 private:
  std::array<std::optional<SemanticClass>, kSourceClasses> table_{};
};

LabeledCloud align_to_radar(const LabeledCloud& cloud, const Extrinsic& e);

/// Indices (ascending) of points that survive ground removal.
std::vector<std::size_t> non_ground_indices(const LabeledCloud& cloud, const GroundParams& params);
/// Per xy cell, the `percentile` z is taken as ground height; points at or
/// below ground + height_margin are dropped.
LabeledCloud remove_ground(const LabeledCloud& cloud, const GroundParams& params = {});

bool fov_keep(const Point3& p, const FovSpec& spec);
/// Indices (ascending) retained by the FOV gate. OpenMP-parallel.
std::vector<std::size_t> fov_indices(const LabeledCloud& cloud, const FovSpec& spec);
LabeledCloud fov_filter(const LabeledCloud& cloud, const FovSpec& spec);

/// Replaces 16-way source ids with mapped classes. An unmapped id throws
/// InputError naming the id.
LabeledCloud consolidate_labels(const io::LpcContents& raw, const LabelMap16to4& map);

Extrinsic extrinsic_from_json(const std::string& text);

}  // namespace rsl::preprocess
