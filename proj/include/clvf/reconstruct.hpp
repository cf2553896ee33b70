#pragma once

#include <vector>

#include "clvf/dynamics.hpp"
#include "clvf/grid.hpp"
#include "clvf/hj_solver.hpp"

namespace clvf {

/// A subsystem value function sampled on the full grid through the state
/// projection of subsystem `subsystem`.
struct BroadcastValue {
  ValueArray value;
  int subsystem = 0;
};

/// Evaluates `sub` at the projection of every node of `full`. A node is
/// masked when any weighted corner of its interpolation stencil is masked.
/// Throws OutOfBounds if a projected node leaves the subsystem grid.
BroadcastValue broadcast(const ValueArray& sub, const Grid& full,
                         const Partition& part, int subsystem);
inline BroadcastValue broadcast(const ClvfResult& sub, const Grid& full,
                                const Partition& part, int subsystem) {
  return broadcast(sub.value, full, part, subsystem);
}

/// Pointwise max; masked where either input is masked.
ValueArray reconstruct_max(const ValueArray& a, const ValueArray& b);
/// Pointwise sum; masked where either input is masked.
ValueArray reconstruct_sum(const ValueArray& a, const ValueArray& b);
inline ValueArray reconstruct_max(const BroadcastValue& a, const BroadcastValue& b) {
  return reconstruct_max(a.value, b.value);
}
inline ValueArray reconstruct_sum(const BroadcastValue& a, const BroadcastValue& b) {
  return reconstruct_sum(a.value, b.value);
}

struct CompareMetrics {
  double sup_diff = 0.0;
  double mean_diff = 0.0;
  std::size_t compared_nodes = 0;      // jointly unmasked, outside the band
  double mask_agreement = 1.0;         // fraction of all nodes
  std::size_t mask_disagreements = 0;
  std::size_t mask_disagreements_outside_band = 0;
  double level = 0.0;
  std::size_t level_only_a = 0;  // in {a <= level} but not {b <= level}
  std::size_t level_only_b = 0;
};

/// Difference metrics over jointly unmasked nodes at least `band` cells away
/// from the grid boundary. Masked nodes count as above every level.
CompareMetrics compare(const ValueArray& a, const ValueArray& b, int band = 2,
                       double level = 1.0);

/// Restricts the comparison to nodes flagged in `region` (same grid).
CompareMetrics compare_on(const ValueArray& a, const ValueArray& b,
                          const std::vector<std::uint8_t>& region);

/// True when the node is at least `band` cells from every face.
bool outside_band(const Grid& grid, std::size_t flat, int band);

enum class Composition { kMax, kSum };

/// Reconstruction evaluated at arbitrary states without materializing the
/// full grid: combines every subsystem value at the projected state.
class CompositeValue {
 public:
  CompositeValue(std::vector<ValueArray> subs, Partition part,
                 Composition composition);

  int state_dim() const { return part_.state_dim; }
  const Partition& partition() const { return part_; }
  const std::vector<ValueArray>& subsystems() const { return subs_; }
  Composition composition() const { return composition_; }

  /// Throws OutOfBounds when a projection leaves its subsystem grid.
  MaskedSample sample(const StateVector& x) const;
  double value(const StateVector& x) const { return sample(x).value; }

  /// Sum of back-projected subsystem gradients (kSum) or the gradient of the
  /// largest subsystem value, lowest index on ties (kMax).
  StateVector gradient(const StateVector& x) const;

  double subsystem_value(int i, const StateVector& x) const;
  StateVector subsystem_gradient(int i, const StateVector& x) const;

 private:
  std::vector<ValueArray> subs_;
  Partition part_;
  Composition composition_;
};

}  // namespace clvf
