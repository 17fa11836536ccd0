#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "rsl/core/types.hpp"

namespace rsl {

/// Uniform 3-D hash grid over a fixed point array. Radius queries are exact
/// (inclusive boundary) and return indices in ascending order.
class SpatialHashGrid {
 public:
  SpatialHashGrid(std::span<const Point3> points, double cell_size);

  void radius_search(const Point3& center, double radius, std::vector<std::size_t>& out) const;
  std::vector<std::size_t> radius_search(const Point3& center, double radius) const {
    std::vector<std::size_t> out;
    radius_search(center, radius, out);
    return out;
  }

  double cell_size() const { return cell_size_; }
  std::size_t size() const { return points_.size(); }

 private:
  struct Key {
    std::int32_t x, y, z;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };

  Key key_of(double x, double y, double z) const;

  std::span<const Point3> points_;
  double cell_size_;
  std::unordered_map<Key, std::vector<std::uint32_t>, KeyHash> cells_;
};

/// Squared 3-D distance in double precision; the one distance used by every
/// radius query in the library.
inline double squared_distance(const Point3& a, const Point3& b) {
  const double dx = static_cast<double>(a.x) - b.x;
  const double dy = static_cast<double>(a.y) - b.y;
  const double dz = static_cast<double>(a.z) - b.z;
  return dx * dx + dy * dy + dz * dz;
}

}  // namespace rsl
