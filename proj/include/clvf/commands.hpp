#pragma once

#include <iosfwd>
#include <string>

#include "clvf/config.hpp"

namespace clvf {

/// A run that finished but produced an unusable result, such as a solve that
/// did not converge under strict mode.
class NumericalFailure : public ClvfError {
 public:
  using ClvfError::ClvfError;
};

/// Output names inside cfg.output_dir. Decay rates are printed with %g.
std::string direct_value_path(const RunConfig& cfg, double gamma);
std::string subsystem_value_path(const RunConfig& cfg, int i, double gamma);
/// Directory of numbered snapshots written next to a value file.
std::string history_dir(const std::string& value_path);

/// Time step shared by every solve of the run: the configured step, or with
/// common_dt the smallest automatic step over the direct grid (when given)
/// and every subsystem grid. Empty when each solve picks its own step.
std::optional<double> run_time_step(const RunConfig& cfg);

/// Solves the direct system and the subsystems for every decay rate and
/// writes value files, convergence logs and optional snapshot directories.
void cmd_solve(const RunConfig& cfg, std::ostream& log);
/// Broadcasts subsystem values to the full grid, combines them by max or sum
/// and compares against the direct value when one is available.
void cmd_reconstruct(const RunConfig& cfg, std::ostream& log);
/// Max mode: S_gamma and T_gamma from the subsystem snapshot histories.
/// Sum mode: the domain where the sum reconstruction keeps a nonempty ACS.
void cmd_sgamma(const RunConfig& cfg, std::ostream& log);
/// Closed-loop runs from every configured x0 with trajectory CSV files and
/// decay reports. Refuses a start outside the configured domain.
void cmd_simulate(const RunConfig& cfg, std::ostream& log);
/// Half-space ACS of the direct and subsystem values at the query points.
void cmd_acs(const RunConfig& cfg, std::ostream& log);
/// Difference metrics between two value files.
void cmd_compare(const RunConfig& cfg, std::ostream& log);

/// Dispatches by subcommand name; throws ConfigError for unknown names.
void run_command(const std::string& name, const RunConfig& cfg, std::ostream& log);

}  // namespace clvf
