#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "rsl/core/types.hpp"

namespace rsl::eval {

/// |pred & gt| / |pred | gt|, 1 when both are empty. Any nonzero byte is set.
double iou(const std::vector<std::uint8_t>& pred, const std::vector<std::uint8_t>& gt);

struct TimestampMatch {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (est index, gt index)
  std::size_t unmatched = 0;                               // est poses without a partner
};

/// Nearest gt timestamp within `tolerance` for every estimate pose.
TimestampMatch match_timestamps(const Trajectory& est, const Trajectory& gt, double tolerance = 0.05);

struct DriftSegment {
  double length = 0.0;
  std::size_t first = 0;  // gt index of the subsequence start
  std::size_t last = 0;
  double translation_error = 0.0;  // percent of length
  double rotation_error = 0.0;     // degrees per 100 m
};

struct DriftResult {
  double translation_error = 0.0;  // percent
  double rotation_error = 0.0;     // deg / 100 m
  std::vector<DriftSegment> segments;
  /// Mean over segments of each length, in the order of the requested lengths.
  std::vector<std::pair<double, std::pair<double, double>>> per_length;
  std::size_t unmatched = 0;

  std::string to_json() const;
};

/// {100, 200, ..., 800}
std::vector<double> kitti_lengths();
/// {10, 20, ..., 80}
std::vector<double> desk_lengths();
/// "a:b:step" or "a,b,c" -> lengths. Throws InputError on malformed text.
std::vector<double> parse_lengths(const std::string& text);

/// KITTI-style relative drift. For every start frame (step `step_frames`) and
/// every length L, the subsequence ends at the first frame whose gt path
/// distance from the start reaches L. Errors of the relative motion
/// (est^-1 * gt) are averaged as percent of L and deg / 100 m.
/// Throws InputError when the gt path is shorter than the smallest length.
DriftResult kitti_drift(const Trajectory& est, const Trajectory& gt, const std::vector<double>& lengths,
                        std::size_t step_frames = 1, double tolerance = 0.05);

/// Mean planar distance over matched timestamps, no alignment.
/// Throws InputError when no timestamps match.
double ape(const Trajectory& est, const Trajectory& gt, double tolerance = 0.05);

struct ApeResult {
  double mean = 0.0;
  double max = 0.0;
  double final_error = 0.0;
  std::size_t matched = 0;
  std::size_t unmatched = 0;
  std::vector<double> errors;

  std::string to_json() const;
};
ApeResult ape_report(const Trajectory& est, const Trajectory& gt, double tolerance = 0.05);

// SVG plots.
struct Series {
  std::string name;
  std::vector<std::pair<double, double>> points;
};

/// x/y overlay of trajectories with equal axis scaling.
std::string svg_trajectories(const std::vector<Series>& series, const std::string& title);
/// Grouped bars: one group per category, one bar per series.
std::string svg_bars(const std::vector<std::string>& categories, const std::vector<Series>& series,
                     const std::string& title, const std::string& y_label);
/// Bars (left axis) with a line (right axis) over the same categories.
std::string svg_bars_line(const std::vector<std::string>& categories, const std::vector<double>& bars,
                          const std::string& bar_label, const std::vector<double>& line,
                          const std::string& line_label, const std::string& title);

}  // namespace rsl::eval
