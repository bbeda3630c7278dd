#ifndef ANNUFLOW_SNAPSHOT_IO_HPP
#define ANNUFLOW_SNAPSHOT_IO_HPP

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include "annuflow/orchestrator.hpp"

namespace annuflow {

/// Columns of one snapshot file, read back verbatim.
struct SnapshotTable {
  Vector r, v, w, c, mu, h;
};

/// Writes `r_hat,v_hat,w_hat,c_hat,mu_hat,h_hat` rows, one per node, with 17
/// significant digits and LF line endings, so values round-trip bit exactly.
void write_snapshot_csv(const Snapshot& snapshot, const RadialGrid& grid,
                        const std::filesystem::path& path);

SnapshotTable read_snapshot_csv(const std::filesystem::path& path);

/// Mid-gap series across snapshots: cycle, t_hat, and v/w/c/mu at r_hat=0.5
/// (linearly interpolated when 0.5 is not a node).
void write_centerline_csv(const RunResult& result,
                          const std::filesystem::path& path);

struct RunManifest {
  std::string version;
  std::vector<std::array<std::string, 3>> config_echo;
  std::vector<double> cycles;
  std::vector<std::string> snapshot_files;
  std::string centerline_file;
  std::string plot_script_file;
  IntegrationStats stats;
  double wall_seconds = 0.0;
  bool aborted = false;
  std::string abort_reason;
  std::vector<std::string> acceptance_lines;  // filled by `verify`
};

void write_manifest(const RunManifest& manifest,
                    const std::filesystem::path& path);

/// Gnuplot script that renders the per-snapshot profiles (v, w, c, mu against
/// r) and the mid-gap series against cycle count.
void emit_plot_script(const RunManifest& manifest,
                      const std::filesystem::path& path);

/// Snapshot file name used by the CLI: <prefix>_cycle_<cycle>.csv.
std::string snapshot_file_name(const std::string& prefix, double cycle);

}  // namespace annuflow

#endif
