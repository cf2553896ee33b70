#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "clvf/dynamics.hpp"
#include "clvf/grid.hpp"
#include "clvf/hj_solver.hpp"

namespace clvf {

/// {u in box : normal . u <= offset}
struct HalfspaceACS {
  ControlVector normal;
  double offset = 0.0;
  ControlBox box;

  /// min over the box of normal . u, attained at a vertex.
  double min_over_box() const;
  bool empty() const { return min_over_box() > offset; }
  bool contains(const ControlVector& u, double tol = 0.0) const;
};

/// A HalfspaceACS over the shared-control coordinates only.
using SharedACS = HalfspaceACS;

class AcsDomainError : public ClvfError {
 public:
  using ClvfError::ClvfError;
};

/// Builds {u : p.g(x) u <= rate - p.f(x)} over `box`.
HalfspaceACS make_acs(const StateVector& p, const StateVector& f,
                      const ControlMatrix& g, double rate, const ControlBox& box);

/// Time-independent ACS of a converged value function:
/// a = DV(x) g(x), b = -gamma V(x) - DV(x) f(x). Throws AcsDomainError when
/// the interpolation stencil at x touches a diverged node.
HalfspaceACS acs_infinite(const SystemDef& sys, const ValueArray& value,
                          const StateVector& x, double gamma);
inline HalfspaceACS acs_infinite(const SystemDef& sys, const ClvfResult& res,
                                 const StateVector& x, double gamma) {
  return acs_infinite(sys, res.value, x, gamma);
}

/// ACS of one backward step between two snapshots:
/// a = DV(x,t) g(x), b = (V(x,t-dt) - V(x,t)) / dt - gamma V(x,t) - DV(x,t) f(x).
HalfspaceACS acs_tv(const SystemDef& sys, const ValueArray& v_tm,
                    const ValueArray& v_t, const StateVector& x, double gamma,
                    double dt);

/// Existential projection onto the trailing `num_shared` control coordinates:
/// {u_c : a_c . u_c <= b - min over the owned box of a_own . u_own}.
SharedACS shared_component(const HalfspaceACS& h, int num_shared);
SharedACS shared_component(const HalfspaceACS& h, const Partition& part);

struct SharedIntersection {
  bool nonempty = false;
  ControlVector witness;  // minimizer of max_i (a_i . u - b_i) over the box
  double margin = 0.0;    // that minimum; nonempty iff margin <= 0
};

/// Decides whether the shared sets intersect inside their common box. The
/// witness minimizes the largest constraint violation; ties go to the
/// lexicographically smallest point.
SharedIntersection intersect_shared(std::span<const SharedACS> sets);
SharedIntersection intersect_shared(const SharedACS& s1, const SharedACS& s2);

/// Owned control minimizing a_own . u_own over the owned box (box midpoint
/// where a coefficient is zero). `h` is over (owned, shared) coordinates.
ControlVector owned_minimizer(const HalfspaceACS& h, int num_shared);

// Shared-control certification ----------------------------------------------

enum class FailureCause : std::uint8_t {
  kSurvived,
  kAcsEmpty,
  kOutOfBounds,
  kMasked,        // diverged start node
  kNotEvaluated,  // skipped because it cannot affect the sublevel set
};

std::string to_string(FailureCause cause);

struct Algorithm1Options {
  /// Uniform random choice inside the certified sets instead of the
  /// deterministic witness.
  std::optional<std::uint64_t> seed;
  /// Visit nodes by increasing reconstructed value and stop at the first
  /// failure; only the nodes needed for the sublevel set are rolled out.
  bool stop_at_first_failure = false;
  /// Accepts intersections whose margin is at most this value.
  double tolerance = 1e-12;
};

struct SGammaResult {
  Grid grid;
  ValueArray reconstructed;            // max of the broadcasts
  std::vector<std::uint8_t> t_gamma;   // survived every step
  std::vector<std::uint8_t> s_gamma;   // {reconstructed <= level}
  double level = 0.0;
  bool empty = true;
  int steps = 0;                       // rollout length
  std::vector<int> survival_steps;
  std::vector<FailureCause> cause;

  std::size_t count(FailureCause c) const;
  std::size_t s_gamma_size() const;
};

/// Snapshot history of one subsystem solve.
struct SubsystemHistory {
  const SubsystemDef* subsystem = nullptr;
  const ClvfResult* result = nullptr;  // must hold snapshots
};

/// Rolls every unmasked node of `full` forward with explicit Euler steps of
/// size dt, choosing at each step a control whose shared part lies in the
/// intersection of the subsystem shared ACSs. Snapshots are read in reversed
/// time, the shorter history padded with its final value. Nodes that survive
/// every step form T_gamma; S_gamma is the largest sublevel set of the max
/// reconstruction inside T_gamma.
SGammaResult algorithm1_sgamma(const SystemDef& sys, const Partition& part,
                               std::span<const SubsystemHistory> subs,
                               const Grid& full, double gamma, double dt,
                               const Algorithm1Options& options = {});

/// Largest c with every unmasked node at value <= c inside `region`, found by
/// bisection to 1e-6 of the value range. Returns -1 when the minimum-value
/// node is outside `region`.
double largest_sublevel(const ValueArray& value,
                        const std::vector<std::uint8_t>& region);

/// Nodes where the sum reconstruction keeps a nonempty time-independent ACS
/// intersection.
struct SBarResult {
  ValueArray reconstructed;
  std::vector<std::uint8_t> feasible;
  std::vector<std::uint8_t> s_bar;
  double level = 0.0;
  bool empty = true;
};

SBarResult sum_certified_domain(const SystemDef& sys, const Partition& part,
                                std::span<const SubsystemDef> subs,
                                std::span<const ValueArray> values,
                                const Grid& full, double gamma,
                                double tolerance = 1e-12);

}  // namespace clvf
