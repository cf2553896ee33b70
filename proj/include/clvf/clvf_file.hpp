#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "clvf/grid.hpp"

namespace clvf {

enum class SolveStatus { kConverged, kMaxIter };

/// Contents of a CLVF1 text file.
///
///   CLVF1
///   <N>
///   <lo> <hi> <count>        one line per dimension
///   gamma <gamma>
///   status converged|maxiter
///   cap <cap>
///   <values, row major, 17 significant digits, one per line>
///
/// On read, nodes whose value is >= cap are flagged as masked.
struct ClvfFile {
  ValueArray values;
  double gamma = 0.0;
  SolveStatus status = SolveStatus::kConverged;
};

void write_clvf1(std::ostream& out, const ClvfFile& file);
void write_clvf1(const std::string& path, const ClvfFile& file);
ClvfFile read_clvf1(std::istream& in);
ClvfFile read_clvf1(const std::string& path);

/// A converged solve plus every stored snapshot, as needed by the
/// shared-control certification. Stored as a directory holding final.clvf and
/// step_000000.clvf, step_000001.clvf, ... where step j is V(x, T - j dt).
/// Snapshot files carry the grid, gamma and cap of the final value.
struct ClvfHistory {
  ClvfFile final;
  std::vector<std::vector<double>> snapshots;
};

/// Creates the directory if needed and removes higher-numbered leftovers.
void write_history(const std::string& dir, const ClvfHistory& history);
ClvfHistory read_history(const std::string& dir);

/// "%.17g"; round-trips every finite double and prints inf as "inf".
std::string format_double(double v);

}  // namespace clvf
