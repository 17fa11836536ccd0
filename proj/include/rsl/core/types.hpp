#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rsl/core/se2.hpp"

namespace rsl {

/// Four-way label scheme. Noise is the catch-all (pedestrians, clutter).
enum class SemanticClass : std::uint8_t {
  Noise = 0,
  Vehicle = 1,
  Vegetation = 2,
  Building = 3,
};

inline constexpr std::size_t kNumSemanticClasses = 4;

std::string_view to_string(SemanticClass c);
/// Accepts "Noise", "Vehicle", ... (case-insensitive).
std::optional<SemanticClass> parse_semantic_class(std::string_view name);
std::optional<SemanticClass> semantic_class_from_id(std::uint8_t id);

struct Point3 {
  float x = 0.0f;
  float y = 0.0f;
  float z = 0.0f;
  float intensity = 0.0f;
};

/// Points with a parallel label list. Filtering keeps relative order.
struct LabeledCloud {
  std::vector<Point3> points;
  std::vector<SemanticClass> labels;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
  void push_back(const Point3& p, SemanticClass c) {
    points.push_back(p);
    labels.push_back(c);
  }
  void reserve(std::size_t n) {
    points.reserve(n);
    labels.reserve(n);
  }
  std::size_t count(SemanticClass c) const;
  /// Throws ContractViolation on length mismatch or non-finite coordinates.
  void validate() const;
  /// Subset in the order of `indices`.
  LabeledCloud select(std::span<const std::size_t> indices) const;
};

/// Polar grid shared by radar scans and class rasters. Row a covers
/// azimuth [2*pi*a/A, 2*pi*(a+1)/A), column r covers range [r*res, (r+1)*res).
struct GridSpec {
  std::uint32_t azimuth_bins = 0;
  std::uint32_t range_bins = 0;
  double range_resolution = 0.0;

  std::size_t cells() const {
    return static_cast<std::size_t>(azimuth_bins) * range_bins;
  }
  std::size_t index(std::uint32_t a, std::uint32_t r) const {
    return static_cast<std::size_t>(a) * range_bins + r;
  }
  double max_range() const { return range_resolution * range_bins; }
  void validate() const;
  bool operator==(const GridSpec&) const = default;
};

/// Azimuth x range power image.
struct PolarScan {
  GridSpec grid;
  std::vector<float> power;  // row-major, azimuth-major
  double timestamp = 0.0;

  static PolarScan zeros(const GridSpec& grid, double timestamp = 0.0);
  float at(std::uint32_t a, std::uint32_t r) const { return power[grid.index(a, r)]; }
  float& at(std::uint32_t a, std::uint32_t r) { return power[grid.index(a, r)]; }
  std::span<const float> row(std::uint32_t a) const {
    return {power.data() + grid.index(a, 0), grid.range_bins};
  }
  void validate() const;
};

/// Per-class binary occupancy on a polar grid. Channel order on disk and in
/// memory: building, vehicle, vegetation. Channels may overlap.
struct ClassRaster {
  GridSpec grid;
  std::array<std::vector<std::uint8_t>, 3> channels;
  double timestamp = 0.0;

  static ClassRaster zeros(const GridSpec& grid, double timestamp = 0.0);
  /// Throws ContractViolation for Noise.
  static std::size_t channel_index(SemanticClass c);
  std::vector<std::uint8_t>& channel(SemanticClass c) { return channels[channel_index(c)]; }
  const std::vector<std::uint8_t>& channel(SemanticClass c) const {
    return channels[channel_index(c)];
  }
  void validate() const;
};

/// Building, vehicle, vegetation: the order of ClassRaster::channels.
inline constexpr std::array<SemanticClass, 3> kRasterClasses = {
    SemanticClass::Building, SemanticClass::Vehicle, SemanticClass::Vegetation};

struct StampedPose {
  double timestamp = 0.0;
  Pose2 pose;
};

struct Trajectory {
  std::vector<StampedPose> poses;

  std::size_t size() const { return poses.size(); }
  bool empty() const { return poses.empty(); }
  /// Throws ContractViolation unless timestamps are strictly increasing.
  void validate() const;
  /// Cumulative planar path length at each pose.
  std::vector<double> path_distances() const;
};

struct ImuSample {
  double timestamp = 0.0;
  double yaw_rate = 0.0;  // rad/s
};

}  // namespace rsl
