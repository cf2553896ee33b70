#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "clvf/types.hpp"

namespace clvf {

/// Rectangular lattice. Node i along dimension k sits at lower_k + i * h_k,
/// with h_k = (upper_k - lower_k) / (count_k - 1). Flat storage is row major:
/// the last dimension varies fastest.
class Grid {
 public:
  Grid() = default;
  Grid(std::vector<double> lower, std::vector<double> upper,
       std::vector<int> counts);

  int dims() const { return static_cast<int>(counts_.size()); }
  std::size_t num_nodes() const { return num_nodes_; }
  double lower(int k) const { return lower_[static_cast<std::size_t>(k)]; }
  double upper(int k) const { return upper_[static_cast<std::size_t>(k)]; }
  double spacing(int k) const { return spacing_[static_cast<std::size_t>(k)]; }
  int count(int k) const { return counts_[static_cast<std::size_t>(k)]; }
  std::size_t stride(int k) const { return strides_[static_cast<std::size_t>(k)]; }
  const std::vector<double>& lowers() const { return lower_; }
  const std::vector<double>& uppers() const { return upper_; }
  const std::vector<int>& counts() const { return counts_; }

  double coordinate(int k, int i) const { return lower(k) + i * spacing(k); }

  std::size_t flat_index(std::span<const int> idx) const;
  void multi_index(std::size_t flat, std::span<int> idx) const;
  StateVector node(std::size_t flat) const;

  /// Inside the closed box, allowing 1e-9 of the extent for rounding.
  bool contains(const StateVector& x) const;

  bool operator==(const Grid& other) const;

 private:
  std::vector<double> lower_;
  std::vector<double> upper_;
  std::vector<int> counts_;
  std::vector<double> spacing_;
  std::vector<std::size_t> strides_;
  std::size_t num_nodes_ = 0;
};

/// Validating factory; throws ConfigError on degenerate bounds or counts < 3.
Grid make_grid(std::span<const double> lower, std::span<const double> upper,
               std::span<const int> counts);

class OutOfBounds : public ClvfError {
 public:
  OutOfBounds(int dim, double coordinate, double lower, double upper);
  int dim() const { return dim_; }
  double coordinate() const { return coordinate_; }

 private:
  int dim_;
  double coordinate_;
};

/// Dense samples of a scalar function on a grid. Nodes flagged in `mask` have
/// diverged and hold `cap`.
struct ValueArray {
  Grid grid;
  std::vector<double> values;
  std::vector<std::uint8_t> mask;
  double cap = std::numeric_limits<double>::infinity();

  ValueArray() = default;
  explicit ValueArray(Grid g, double fill = 0.0)
      : grid(std::move(g)), values(grid.num_nodes(), fill) {}

  bool masked(std::size_t i) const { return !mask.empty() && mask[i] != 0; }
  std::size_t num_masked() const;
};

/// Enclosing cell of a point: flat index of its lowest corner and the
/// fractional position inside it per dimension.
struct CellLocation {
  std::size_t base = 0;
  int dims = 0;
  double frac[kMaxStateDim] = {};
  int index[kMaxStateDim] = {};
};

/// Throws OutOfBounds naming the first offending coordinate.
CellLocation locate(const Grid& grid, const StateVector& x);

/// Non-throwing variant: false when `x` lies outside the grid, with the same
/// tolerance as Grid::contains.
bool try_locate(const Grid& grid, const StateVector& x, CellLocation& cell);

/// Multilinear interpolation over the 2^N corners of the enclosing cell.
double interpolate(const ValueArray& va, const StateVector& x);

struct MaskedSample {
  double value = 0.0;
  bool masked = false;  // any corner of the stencil is masked
};
MaskedSample interpolate_masked(const ValueArray& va, const StateVector& x);

/// Same stencil, but on a raw buffer laid out on `grid`.
double interpolate_buffer(const Grid& grid, std::span<const double> values,
                          const CellLocation& cell);

/// Fixes coordinate `dim` of a grid function at `value`.
struct AxisValue {
  int dim = 0;
  double value = 0.0;
};

/// Restriction of `va` to the fixed coordinates, read by linear interpolation
/// along the fixed dimensions. The free dimensions keep their order and node
/// layout; a node is masked when a weighted corner is masked. Throws
/// ConfigError for repeated or invalid dimensions or when nothing stays free,
/// OutOfBounds for a fixed value outside the grid.
ValueArray slice(const ValueArray& va, std::span<const AxisValue> fixed);

/// Per-dimension derivative arrays: central differences inside, one-sided at
/// the boundary.
std::vector<std::vector<double>> gradient(const ValueArray& va);

/// The same difference stencil evaluated at one node.
StateVector node_gradient(const Grid& grid, std::span<const double> values,
                          std::size_t flat);

/// Node gradients interpolated multilinearly to an arbitrary point.
StateVector gradient_at(const Grid& grid, std::span<const double> values,
                        const StateVector& x);
/// Same, for a point already located in `cell`.
StateVector gradient_at(const Grid& grid, std::span<const double> values,
                        const CellLocation& cell);
inline StateVector gradient_at(const ValueArray& va, const StateVector& x) {
  return gradient_at(va.grid, va.values, x);
}

}  // namespace clvf
