#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clvf/types.hpp"

namespace clvf {

/// Per-coordinate closed control interval [lower_j, upper_j].
struct ControlBox {
  ControlVector lower;
  ControlVector upper;

  int dim() const { return static_cast<int>(lower.size()); }
  bool contains(const ControlVector& u, double tol = 0.0) const;
  ControlVector midpoint() const { return 0.5 * (lower + upper); }
};

ControlBox make_box(std::span<const double> lower,
                    std::span<const double> upper);

enum class LossKind { kInfinityNorm };

/// Control-affine system x' = f(x) + g(x) u with a box of admissible controls
/// and the origin as an equilibrium.
class SystemDef {
 public:
  using DriftFn = std::function<StateVector(const StateVector&)>;
  using InputFn = std::function<ControlMatrix(const StateVector&)>;

  SystemDef(std::string name, int state_dim, ControlBox box, DriftFn drift,
            InputFn input, LossKind loss = LossKind::kInfinityNorm);

  const std::string& name() const { return name_; }
  int state_dim() const { return state_dim_; }
  int control_dim() const { return box_.dim(); }
  const ControlBox& control_box() const { return box_; }
  LossKind loss_kind() const { return loss_; }

  StateVector drift(const StateVector& x) const { return drift_(x); }
  ControlMatrix input_matrix(const StateVector& x) const { return input_(x); }
  double loss(const StateVector& x) const;

 private:
  std::string name_;
  int state_dim_;
  ControlBox box_;
  DriftFn drift_;
  InputFn input_;
  LossKind loss_;
};

class ControlOutOfBounds : public ClvfError {
 public:
  using ClvfError::ClvfError;
};

/// Returns f(x) + g(x) u after checking dimensions and that u lies in the box.
StateVector eval_dynamics(const SystemDef& sys, const StateVector& x,
                          const ControlVector& u);

/// State/control split into per-subsystem owned indices plus indices shared by
/// every subsystem. Indices are zero based. Subsystem i works on
/// (own_states[i], shared_states) and (own_controls[i], shared_controls), in
/// that order.
struct Partition {
  int state_dim = 0;
  int control_dim = 0;
  std::vector<std::vector<int>> own_states;
  std::vector<std::vector<int>> own_controls;
  std::vector<int> shared_states;
  std::vector<int> shared_controls;

  int num_subsystems() const { return static_cast<int>(own_states.size()); }
  std::vector<int> subsystem_states(int i) const;
  std::vector<int> subsystem_controls(int i) const;
  bool has_shared_controls() const { return !shared_controls.empty(); }

  /// Throws ConfigError unless the lists cover every index exactly once.
  void validate() const;
};

struct SubsystemDef {
  SystemDef system;
  int index = 0;
  std::vector<int> state_indices;    // into the parent state
  std::vector<int> control_indices;  // into the parent control
  int num_shared_controls = 0;       // trailing entries of control_indices
};

class SelfContainmentViolation : public ClvfError {
 public:
  SelfContainmentViolation(int subsystem, int state_row, int perturbed,
                           bool perturbed_is_control);
  int subsystem() const { return subsystem_; }
  int state_row() const { return state_row_; }
  int perturbed_index() const { return perturbed_; }
  bool perturbed_is_control() const { return is_control_; }

 private:
  int subsystem_;
  int state_row_;
  int perturbed_;
  bool is_control_;
};

class ConflictError : public ClvfError {
 public:
  using ClvfError::ClvfError;
};

/// Splits `sys` into self-contained subsystems. Self-containment is probed by
/// finite perturbation of every foreign state and control at a fixed set of
/// sample states; any change above 1e-9 raises SelfContainmentViolation.
std::vector<SubsystemDef> decompose(const SystemDef& sys,
                                    const Partition& part);

StateVector project_state(const Partition& part, int i, const StateVector& x);
ControlVector project_control(const Partition& part, int i,
                              const ControlVector& u);

/// Assembles the full control from per-subsystem controls. Shared components
/// must agree to within `tol`, otherwise ConflictError.
ControlVector backproject_control(const Partition& part,
                                  std::span<const ControlVector> sub_controls,
                                  double tol = 1e-9);
ControlVector backproject_control(const Partition& part,
                                  const ControlVector& v1,
                                  const ControlVector& v2, double tol = 1e-9);

// Catalog ------------------------------------------------------------------

/// Names accepted by make_system.
std::vector<std::string> catalog_names();

/// Hard-coded systems: integrator1d, nonlinear2d, coupled3d, single3d,
/// quad10d, pvtol6d, exercise3d, exercise2d_neg, exercise2d_pos.
SystemDef make_system(std::string_view name);

/// The decomposition used for each catalog system.
Partition default_partition(std::string_view name);

/// c * prod_k x_k^powers[k]
struct Monomial {
  double coeff = 0.0;
  std::vector<int> powers;
};

/// Builds a system from polynomial terms: drift[k] lists the monomials of
/// f_k, input[k][j] those of g_kj.
SystemDef make_polynomial_system(
    std::string name, int state_dim, ControlBox box,
    std::vector<std::vector<Monomial>> drift,
    std::vector<std::vector<std::vector<Monomial>>> input);

}  // namespace clvf
