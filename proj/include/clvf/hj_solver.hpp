#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "clvf/clvf_file.hpp"
#include "clvf/dynamics.hpp"
#include "clvf/grid.hpp"

namespace clvf {

/// Spatial discretization of the Hamiltonian inside the backward update.
enum class Scheme {
  /// Monotone upwinding on a wide stencil: the velocity of every candidate
  /// control, in cells per unit time, is split greedily into moves towards
  /// axis and diagonal neighbours, so flow along a diagonal reads values along
  /// that diagonal. Candidates are the box vertices and the controls zeroing
  /// a velocity component. Grid exits are treated as divergence.
  kDiagonalUpwind,
  /// Monotone upwinding along the axes: for every control the derivative
  /// along dimension k is taken on the side the flow points to, and the
  /// minimum over the control box is taken exactly. Grid exits are treated
  /// as divergence.
  kUpwind,
  /// Global Lax-Friedrichs: central costate plus per-dimension dissipation
  /// alpha_k (D+ - D-) / 2, one-sided extrapolation at the boundary.
  kLaxFriedrichs,
};

struct SolverConfig {
  double gamma = 0.0;
  std::optional<double> dt;  // empty: cfl * stability limit
  double cfl = 0.5;
  double eps_conv = 1e-4;
  int stable_steps = 3;
  double t_max = 200.0;
  std::optional<double> cap;  // empty: 1e3 * max loss on the grid
  Scheme scheme = Scheme::kDiagonalUpwind;
  bool store_history = false;
};

struct ClvfResult {
  ValueArray value;  // converged samples; masked nodes diverged
  SolveStatus status = SolveStatus::kMaxIter;
  double gamma = 0.0;
  double dt = 0.0;
  double t_conv = 0.0;
  int iterations = 0;
  std::vector<double> change_history;
  /// snapshots[j] holds V(x, T - j dt); snapshots[0] is the loss. Only filled
  /// with SolverConfig::store_history.
  std::vector<std::vector<double>> snapshots;
};

class CflViolation : public ClvfError {
 public:
  using ClvfError::ClvfError;
};

struct HamiltonianValue {
  double value = 0.0;
  ControlVector u_star;
};

/// min over the control box of p . (f(x) + g(x) u), with the bang-bang
/// minimizer (box midpoint on ties).
HamiltonianValue hamiltonian(const SystemDef& sys, const StateVector& x,
                             const StateVector& p);

/// Per-dimension bound on |x'_k| over the grid and the control box.
std::vector<double> velocity_bounds(const SystemDef& sys, const Grid& grid);

/// Largest step for which the explicit update is monotone:
/// min_k (h_k / alpha_k) for the diagonal stencil, 1 / sum_k (alpha_k / h_k)
/// for the axis-aligned ones.
double cfl_limit(const SystemDef& sys, const Grid& grid,
                 Scheme scheme = Scheme::kDiagonalUpwind);

Scheme parse_scheme(const std::string& name);
std::string to_string(Scheme scheme);

/// Backward time-marching operator for one system on one grid. Dynamics and
/// loss are sampled once at construction.
class VariationalStepper {
 public:
  VariationalStepper(const SystemDef& sys, const Grid& grid,
                     const SolverConfig& cfg);

  double dt() const { return dt_; }
  double cap() const { return cap_; }
  const std::vector<double>& alpha() const { return alpha_; }
  const std::vector<double>& loss() const { return loss_; }

  /// Terminal condition V(x, T) = loss(x).
  ValueArray terminal() const;

  /// V(., t - dt) from V(., t). Returns the sup-norm change over nodes that
  /// are unmasked after the step.
  double step(const ValueArray& current, ValueArray& next) const;

 private:
  double diagonal_rate(const double* value, std::size_t node) const;
  double diagonal_candidate(const double* value, std::size_t node,
                            const double* velocity) const;
  double axis_rate(const double* value, std::size_t node) const;
  double upwind_rate(std::size_t node, const double* dplus,
                     const double* dminus) const;
  double lax_friedrichs_rate(std::size_t node, const double* dplus,
                             const double* dminus) const;

  const SystemDef* sys_;
  Grid grid_;
  SolverConfig cfg_;
  int n_ = 0;
  int m_ = 0;
  double dt_ = 0.0;
  double cap_ = 0.0;
  std::vector<double> alpha_;
  std::vector<double> inv_spacing_;
  std::vector<double> loss_;
  std::vector<double> drift_;   // n per node
  std::vector<double> input_;   // n*m per node, row major
  std::vector<std::uint32_t> boundary_;  // bit 2k: lower face, 2k+1: upper
  // Each row driven by at most one control everywhere: row_control_[k] is
  // that control or -1. Empty when some row mixes controls.
  std::vector<int> row_control_;
};

/// One backward step of the variational inequality from `v_t`.
ValueArray step_vi(const ValueArray& v_t, const SystemDef& sys,
                   const SolverConfig& cfg);

using StepObserver = std::function<void(int iteration, double time, double change)>;

/// Marches from V(x, T) = loss(x) until the sup change stays below eps_conv
/// for stable_steps consecutive steps (status converged) or t_max elapses
/// (status maxiter).
ClvfResult solve_clvf(const SystemDef& sys, const Grid& grid,
                      const SolverConfig& cfg,
                      const StepObserver& observer = {});

/// 1 for nodes with a finite converged value.
std::vector<std::uint8_t> extract_roes(const ClvfResult& res);

}  // namespace clvf
