#pragma once

#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace clvf {

/// Upper bounds on state/control dimension. Vectors are stack allocated with
/// these as maximum sizes so the inner solver loops never touch the heap.
inline constexpr int kMaxStateDim = 12;
inline constexpr int kMaxControlDim = 4;

using StateVector =
    Eigen::Matrix<double, Eigen::Dynamic, 1, 0, kMaxStateDim, 1>;
using ControlVector =
    Eigen::Matrix<double, Eigen::Dynamic, 1, 0, kMaxControlDim, 1>;
using ControlMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0,
                                    kMaxStateDim, kMaxControlDim>;

/// Base class for every error raised by this library.
class ClvfError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public ClvfError {
 public:
  using ClvfError::ClvfError;
};

class ConfigError : public ClvfError {
 public:
  using ClvfError::ClvfError;
};

}  // namespace clvf
