#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clvf/dynamics.hpp"
#include "clvf/grid.hpp"
#include "clvf/hj_solver.hpp"

namespace clvf {

struct GridSpec {
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<int> counts;

  Grid make() const;
  bool operator==(const GridSpec&) const = default;
};

/// One polynomial term c * prod_k x_k^p_k.
struct TermSpec {
  double coeff = 0.0;
  std::vector<int> powers;
  bool operator==(const TermSpec&) const = default;
};

/// A user-defined control-affine system given by polynomial terms.
struct CustomSystemSpec {
  int state_dim = 0;
  std::vector<double> control_lower;
  std::vector<double> control_upper;
  std::vector<std::vector<TermSpec>> drift;               // [state]
  std::vector<std::vector<std::vector<TermSpec>>> input;  // [state][control]
  bool operator==(const CustomSystemSpec&) const = default;
};

struct PartitionSpec {
  std::vector<std::vector<int>> own_states;
  std::vector<std::vector<int>> own_controls;
  std::vector<int> shared_states;
  std::vector<int> shared_controls;
  bool operator==(const PartitionSpec&) const = default;
};

struct SolverSpec {
  std::optional<double> dt;  // empty: automatic
  double cfl = 0.5;
  double eps_conv = 1e-4;
  int stable_steps = 3;
  double t_max = 200.0;
  std::optional<double> cap;  // empty: 1e3 * max loss
  std::string scheme = "diagonal-upwind";
  /// Use the smallest automatic step of every grid in the run for all
  /// solves so their histories share one time axis.
  bool common_dt = true;
  bool operator==(const SolverSpec&) const = default;
};

/// Value files read by the commands. Empty entries fall back to the names
/// the solve command writes into the output directory.
struct InputSpec {
  std::string direct;
  std::vector<std::string> subsystems;
  std::vector<std::string> histories;
  bool operator==(const InputSpec&) const = default;
};

struct ReconstructSpec {
  std::string mode = "max";  // max | sum
  int band = 2;
  double level = 1.0;
  bool operator==(const ReconstructSpec&) const = default;
};

struct SGammaSpec {
  /// Rollout step as a multiple of the solver step.
  double dt_multiple = 1.0;
  bool stop_at_first_failure = false;
  double tolerance = 1e-12;
  bool operator==(const SGammaSpec&) const = default;
};

struct SimulateSpec {
  std::string value = "max";     // direct | max | sum
  std::string domain = "roes";   // roes | sbar | none
  std::vector<std::vector<double>> x0;
  std::optional<double> dt;      // empty: solver step / 5
  double t_max = 30.0;
  double origin_tolerance = 1e-2;
  std::vector<double> u_ref;     // empty: zero
  double eta = 0.1;
  double slack_kappa = 0.0;
  /// One QP per subsystem for max composites without shared controls.
  bool split_subsystems = true;
  bool operator==(const SimulateSpec&) const = default;
};

struct AcsSpec {
  std::vector<std::vector<double>> points;
  bool operator==(const AcsSpec&) const = default;
};

struct CompareSpec {
  std::string a;
  std::string b;
  std::string region;  // optional 0/1 CLVF1 mask restricting the comparison
  int band = 2;
  double level = 1.0;
  bool operator==(const CompareSpec&) const = default;
};

struct SliceSpec {
  int dim = 0;
  double value = 0.0;
  bool operator==(const SliceSpec&) const = default;
};

/// Everything one CLI invocation needs. Every default lives here.
struct RunConfig {
  std::string system;
  std::optional<CustomSystemSpec> custom;
  std::optional<PartitionSpec> partition;  // empty: catalog default
  GridSpec grid;
  std::vector<GridSpec> subsystem_grids;   // empty: projections of `grid`
  std::vector<double> gammas = {0.1};
  SolverSpec solver;
  bool solve_direct = true;
  bool solve_subsystems = true;
  std::string output_dir = ".";
  InputSpec inputs;
  ReconstructSpec reconstruct;
  SGammaSpec sgamma;
  SimulateSpec simulate;
  AcsSpec acs;
  CompareSpec compare;
  std::vector<double> levels;
  std::vector<SliceSpec> slices;
  bool history = false;
  bool strict = false;
  std::optional<int> threads;
  std::optional<std::uint64_t> seed;

  bool operator==(const RunConfig&) const = default;
};

/// Parses JSON text. Unknown keys and wrong types raise ConfigError naming
/// the offending field.
RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::string& path);
/// Pretty JSON with every field written out.
std::string serialize_config(const RunConfig& cfg);

/// Throws ConfigError unless names, dimensions and numeric ranges are
/// consistent with the selected system.
void validate_config(const RunConfig& cfg);

SystemDef make_run_system(const RunConfig& cfg);
Partition make_run_partition(const RunConfig& cfg);
/// Grid of subsystem i: the configured one or the projection of `grid`.
Grid make_subsystem_grid(const RunConfig& cfg, int i);
SolverConfig make_solver_config(const RunConfig& cfg, double gamma);

/// Parses "d=v" slice flags and "v1,v2" level lists.
SliceSpec parse_slice(const std::string& text);
std::vector<double> parse_levels(const std::string& text);

}  // namespace clvf
