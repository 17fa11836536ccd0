#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string_view>
#include <vector>

#include "rsl/core/types.hpp"

namespace rsl::radar {

struct RadarPoint {
  std::uint32_t azimuth_bin = 0;
  std::uint32_t range_bin = 0;
  float power = 0.0f;
  double x = 0.0;  // cell center, meters
  double y = 0.0;
  std::optional<SemanticClass> label;
};

struct RadarPointSet {
  GridSpec grid;
  double timestamp = 0.0;
  std::vector<RadarPoint> points;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
};

enum class MaskMode { NoneRemoved, VehicleRemoved, OnlyBuilding };

std::string_view to_string(MaskMode m);
/// Accepts none|vehicle|building and none-removed|vehicle-removed|only-building.
std::optional<MaskMode> parse_mask_mode(std::string_view text);

RadarPoint make_point(std::uint32_t a, std::uint32_t r, float power, const GridSpec& grid);

/// Per azimuth row, the k strongest bins with power > min_power, ties going
/// to the smaller range bin. Output is ordered by (row, range bin).
RadarPointSet k_strongest(const PolarScan& scan, std::size_t k, float min_power = 0.0f);

/// Cells of `channel` grown by `dilation` cells in azimuth (wrapping) and range.
std::vector<std::uint8_t> dilate(const std::vector<std::uint8_t>& channel, const GridSpec& grid,
                                 std::uint32_t dilation);

/// NoneRemoved: unchanged. VehicleRemoved: drop points on (dilated) vehicle
/// cells. OnlyBuilding: keep only points on (dilated) building cells.
/// Surviving points get the matching label when one applies.
RadarPointSet apply_semantic_mask(const RadarPointSet& points, const ClassRaster& raster,
                                  MaskMode mode, std::uint32_t dilation = 1);

/// Mean squared pixel difference of two equally sized images.
double mse(const PolarScan& a, const PolarScan& b);

/// Scan image keeping only the given points' powers (everything else zero).
PolarScan points_to_image(const RadarPointSet& points);

// RPS binary: "RPS1", u32 A, u32 R, f64 resolution, f64 timestamp, u32 count,
// per point u32 azimuth bin, u32 range bin, f32 power, u8 label (255 = none).
// Coordinates are recomputed from the bins on read.
void write_rps(const std::filesystem::path& path, const RadarPointSet& points);
RadarPointSet read_rps(const std::filesystem::path& path);

}  // namespace rsl::radar
