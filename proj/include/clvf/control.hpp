#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "clvf/dynamics.hpp"
#include "clvf/grid.hpp"
#include "clvf/reconstruct.hpp"

namespace clvf {

/// min ||u - u_ref||_2 subject to a . u <= b and u in box.
struct QpProblem {
  ControlVector u_ref;
  ControlVector a;
  double b = 0.0;
  ControlBox box;
};

/// Raised when min over the box of a . u exceeds b.
class QpInfeasible : public ClvfError {
 public:
  QpInfeasible(double min_over_box, double offset);
  double min_over_box() const { return min_over_box_; }
  double offset() const { return offset_; }

 private:
  double min_over_box_;
  double offset_;
};

/// Exact solution for one linear constraint plus the box. The minimizer is
/// clip(u_ref - lambda a) for the smallest lambda >= 0 meeting the constraint;
/// lambda is found by sweeping the breakpoints where coordinates hit a face.
ControlVector qp_control(const QpProblem& p);

/// A scalar function of the state with a gradient, read by the controller.
class ValueSource {
 public:
  virtual ~ValueSource() = default;
  virtual int state_dim() const = 0;
  /// False when x lies outside the region where the function is sampled.
  virtual bool contains(const StateVector& x) const = 0;
  virtual MaskedSample sample(const StateVector& x) const = 0;
  virtual StateVector gradient(const StateVector& x) const = 0;
  /// Largest grid spacing, used to size the optional constraint slack.
  virtual double spacing() const = 0;
};

/// Interpolated values of one grid function.
class GridValueSource : public ValueSource {
 public:
  explicit GridValueSource(ValueArray value) : value_(std::move(value)) {}
  int state_dim() const override { return value_.grid.dims(); }
  bool contains(const StateVector& x) const override { return value_.grid.contains(x); }
  MaskedSample sample(const StateVector& x) const override {
    return interpolate_masked(value_, x);
  }
  StateVector gradient(const StateVector& x) const override {
    return gradient_at(value_, x);
  }
  double spacing() const override;
  const ValueArray& value() const { return value_; }

 private:
  ValueArray value_;
};

/// Max or sum of subsystem values evaluated at projected states.
class CompositeValueSource : public ValueSource {
 public:
  explicit CompositeValueSource(CompositeValue value) : value_(std::move(value)) {}
  int state_dim() const override { return value_.state_dim(); }
  bool contains(const StateVector& x) const override;
  MaskedSample sample(const StateVector& x) const override { return value_.sample(x); }
  StateVector gradient(const StateVector& x) const override { return value_.gradient(x); }
  double spacing() const override;
  const CompositeValue& value() const { return value_; }

 private:
  CompositeValue value_;
};

/// Control at x: a = DV g, b = -gamma V - DV f + slack.
QpProblem make_qp(const SystemDef& sys, const ValueSource& value,
                  const StateVector& x, double gamma,
                  const ControlVector& u_ref, double slack = 0.0);

enum class Termination {
  kTimeLimit,
  kReachedOrigin,
  kInfeasible,
  kOutOfBounds,
  kMasked,
};

std::string to_string(Termination t);

struct Trajectory {
  std::vector<double> times;
  std::vector<StateVector> states;
  std::vector<ControlVector> controls;  // control held from times[k]
  std::vector<double> values;
  Termination termination = Termination::kTimeLimit;

  std::size_t size() const { return times.size(); }
};

struct SimulationOptions {
  double dt = 0.01;
  double t_max = 30.0;
  double origin_tolerance = 1e-2;  // stop once ||x||_inf falls below
  std::optional<ControlVector> u_ref;  // default: zero
  /// kappa in the relaxation kappa * h * ||g(x)||_2 added to the constraint
  /// offset; 0 disables it.
  double slack_kappa = 0.0;
  /// For a max composite without shared controls, every subsystem value must
  /// decay under its own controls, one QP per subsystem. Otherwise a single QP
  /// on the largest subsystem value leaves the other subsystems uncontrolled.
  bool split_subsystems = true;
};

/// Control applied at x by the closed loop. Throws QpInfeasible.
ControlVector qp_feedback(const SystemDef& sys, const ValueSource& value,
                          const StateVector& x, double gamma,
                          const ControlVector& u_ref,
                          const SimulationOptions& options);

/// Closed loop with the QP controller: the control is recomputed every dt and
/// held while RK4 advances the state. Termination reasons are recorded, never
/// thrown. The last sample has no applied control; its row repeats the
/// previous one.
Trajectory simulate(const SystemDef& sys, const ValueSource& value,
                    const StateVector& x0, double gamma,
                    const SimulationOptions& options);

struct DecayReport {
  double gamma = 0.0;
  double eta = 0.0;
  std::size_t samples = 0;
  std::size_t violations = 0;
  double max_violation = 0.0;  // largest V - envelope, 0 when none
  std::optional<double> first_violation_time;
  bool passed() const { return violations == 0; }
};

/// V(x0) exp(-gamma (t - t0)) at each time stamp.
std::vector<double> decay_envelope(const Trajectory& traj, double gamma);

/// Checks V(t) <= V(t0) exp(-gamma (t - t0)) (1 + eta) at every sample.
DecayReport certify_decay(const Trajectory& traj, double gamma, double eta);

}  // namespace clvf
