#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rsl/core/types.hpp"

namespace rsl::io {

namespace fs = std::filesystem;

/// Raw contents of an LPC cloud file. The class byte is kept as read so the
/// same container serves 16-way source ids and 4-way semantic ids.
struct LpcContents {
  std::vector<Point3> points;
  std::vector<std::uint8_t> class_ids;
};

// LPC: "LPC1", u32 count, then per point f32 x,y,z,intensity + u8 class id.
// All little-endian.
std::vector<std::uint8_t> encode_lpc(const std::vector<Point3>& points,
                                     const std::vector<std::uint8_t>& class_ids);
LpcContents decode_lpc(const std::vector<std::uint8_t>& bytes);

LpcContents read_lpc_raw(const fs::path& path);
/// Rejects class ids outside 0..3.
LabeledCloud read_lpc(const fs::path& path);
void write_lpc(const fs::path& path, const LabeledCloud& cloud);
void write_lpc_raw(const fs::path& path, const LpcContents& contents);
LabeledCloud to_labeled_cloud(const LpcContents& contents);

/// `scan.psc` -> `scan.psc.json`
fs::path sidecar_path(const fs::path& path);

// Polar scan: row-major f32 A*R values + JSON sidecar
// {azimuth_bins, range_bins, range_resolution_m, timestamp_s}.
void write_scan(const fs::path& path, const PolarScan& scan);
PolarScan read_scan(const fs::path& path);

// Class raster: three row-major u8 channels (building, vehicle, vegetation)
// + the same sidecar with a "channels" field.
void write_raster(const fs::path& path, const ClassRaster& raster);
/// When `expected` is given, a sidecar grid that differs is rejected.
ClassRaster read_raster(const fs::path& path,
                        const std::optional<GridSpec>& expected = std::nullopt);

// CSV "timestamp_s,x_m,y_m,theta_rad".
void write_trajectory(const fs::path& path, const Trajectory& traj);
Trajectory read_trajectory(const fs::path& path);
std::string format_trajectory_csv(const Trajectory& traj);
Trajectory parse_trajectory_csv(const std::string& text, const std::string& origin = "<memory>");

// CSV "timestamp_s,yaw_rate_rad_s".
void write_imu(const fs::path& path, const std::vector<ImuSample>& samples);
std::vector<ImuSample> read_imu(const fs::path& path);

std::vector<std::uint8_t> read_bytes(const fs::path& path);
void write_bytes(const fs::path& path, const std::vector<std::uint8_t>& bytes);
std::string read_text(const fs::path& path);
void write_text(const fs::path& path, const std::string& text);

/// Lexicographically sorted regular files in `dir` with the given extension.
std::vector<fs::path> list_files(const fs::path& dir, const std::string& extension);

}  // namespace rsl::io
