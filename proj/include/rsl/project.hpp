#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rsl/core/types.hpp"

namespace rsl::project {

/// Neighbor frames around a reference frame, each with its pose expressed in
/// the reference frame (maps neighbor coordinates into reference coordinates).
struct WindowSpec {
  std::size_t frames_before = 0;
  std::size_t frames_after = 0;
  std::vector<Pose2> relative_poses;  // before frames first (oldest first), then after frames

  void validate() const;
};

/// Polar cell of a planar point, or nullopt beyond the last range bin.
std::optional<std::pair<std::uint32_t, std::uint32_t>> polar_cell(double x, double y,
                                                                  const GridSpec& grid);
/// Planar coordinates of a cell center.
std::pair<double, double> cell_center(std::uint32_t a, std::uint32_t r, const GridSpec& grid);

/// Binary occupancy of one class, height discarded. Noise is rejected.
std::vector<std::uint8_t> rasterize_class(const LabeledCloud& cloud, SemanticClass c,
                                          const GridSpec& grid);

/// Building, vehicle and vegetation channels.
ClassRaster project_all(const LabeledCloud& cloud, const GridSpec& grid, double timestamp = 0.0);

/// OR-combines neighbor rasters, moved into the reference frame cell by cell
/// (cell center -> Cartesian -> pose -> nearest polar cell), with the reference.
ClassRaster accumulate_window(const ClassRaster& reference, std::span<const ClassRaster> neighbors,
                              const WindowSpec& window);

GridSpec grid_from_json(const std::string& text);

}  // namespace rsl::project
