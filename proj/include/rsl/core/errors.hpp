#pragma once

#include <stdexcept>

namespace rsl {

/// Thrown when a caller breaks a documented precondition (empty cluster,
/// mismatched grids, non-PSD covariance, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Thrown for malformed or inconsistent external input: files, configs,
/// OSM documents, label maps.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rsl
