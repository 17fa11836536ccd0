#pragma once

#include <cstdint>
#include <vector>

#include "rsl/core/types.hpp"
#include "rsl/preprocess.hpp"
#include "rsl/radarproc.hpp"
#include "rsl/refine.hpp"

/// Single-threaded counterparts of the OpenMP kernels. Tests compare the two
/// for exact equality; the benchmark target times them side by side.
namespace rsl::serial {

std::vector<std::size_t> fov_indices(const LabeledCloud& cloud, const preprocess::FovSpec& spec);
std::vector<std::uint8_t> rasterize_class(const LabeledCloud& cloud, SemanticClass c, const GridSpec& grid);
radar::RadarPointSet k_strongest(const PolarScan& scan, std::size_t k, float min_power = 0.0f);
double mse(const PolarScan& a, const PolarScan& b);
LabeledCloud refine_labels(const LabeledCloud& cloud, const refine::RefineParams& params);

}  // namespace rsl::serial
