#include "annuflow/snapshot_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace annuflow {

namespace {

std::string format_full(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double interp_mid(const Vector& f, const RadialGrid& grid) {
  const double x = 0.5 / grid.h;
  int j = static_cast<int>(x);
  if (j >= grid.n_nodes - 1) j = grid.n_nodes - 2;
  const double frac = x - j;
  return f[j] + frac * (f[j + 1] - f[j]);
}

}  // namespace

void write_snapshot_csv(const Snapshot& snapshot, const RadialGrid& grid,
                        const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  }
  out << "r_hat,v_hat,w_hat,c_hat,mu_hat,h_hat\n";
  for (int j = 0; j < grid.n_nodes; ++j) {
    out << format_full(grid.node(j)) << ',' << format_full(snapshot.v[j]) << ','
        << format_full(snapshot.w[j]) << ',' << format_full(snapshot.c[j])
        << ',' << format_full(snapshot.mu[j]) << ','
        << format_full(snapshot.h[j]) << '\n';
  }
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

SnapshotTable read_snapshot_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::string line;
  if (!std::getline(in, line) ||
      line != "r_hat,v_hat,w_hat,c_hat,mu_hat,h_hat") {
    throw std::runtime_error("unexpected header in '" + path.string() + "'");
  }
  std::vector<std::array<double, 6>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::array<double, 6> row{};
    const char* p = line.c_str();
    for (int k = 0; k < 6; ++k) {
      char* end = nullptr;
      row[k] = std::strtod(p, &end);
      if (end == p) {
        throw std::runtime_error("bad number in '" + path.string() + "'");
      }
      p = end;
      if (k < 5) {
        if (*p != ',') {
          throw std::runtime_error("expected ',' in '" + path.string() + "'");
        }
        ++p;
      }
    }
    rows.push_back(row);
  }
  SnapshotTable table;
  const int n = static_cast<int>(rows.size());
  table.r.resize(n);
  table.v.resize(n);
  table.w.resize(n);
  table.c.resize(n);
  table.mu.resize(n);
  table.h.resize(n);
  for (int j = 0; j < n; ++j) {
    table.r[j] = rows[j][0];
    table.v[j] = rows[j][1];
    table.w[j] = rows[j][2];
    table.c[j] = rows[j][3];
    table.mu[j] = rows[j][4];
    table.h[j] = rows[j][5];
  }
  return table;
}

void write_centerline_csv(const RunResult& result,
                          const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  }
  out << "cycle,t_hat,v_mid,w_mid,c_mid,mu_mid\n";
  for (const Snapshot& snap : result.snapshots) {
    out << format_full(snap.cycle) << ',' << format_full(snap.t_hat) << ','
        << format_full(interp_mid(snap.v, result.grid)) << ','
        << format_full(interp_mid(snap.w, result.grid)) << ','
        << format_full(interp_mid(snap.c, result.grid)) << ','
        << format_full(interp_mid(snap.mu, result.grid)) << '\n';
  }
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

void write_manifest(const RunManifest& manifest,
                    const std::filesystem::path& path) {
  nlohmann::json j;
  j["version"] = manifest.version;
  j["config"] = nlohmann::json::array();
  for (const auto& entry : manifest.config_echo) {
    j["config"].push_back(
        {{"section", entry[0]}, {"key", entry[1]}, {"value", entry[2]}});
  }
  j["cycles"] = manifest.cycles;
  j["snapshots"] = manifest.snapshot_files;
  j["centerline"] = manifest.centerline_file;
  j["plot_script"] = manifest.plot_script_file;
  j["stats"] = {{"accepted_steps", manifest.stats.accepted_steps},
                {"rejected_steps", manifest.stats.rejected_steps},
                {"newton_iters", manifest.stats.newton_iters},
                {"rhs_evals", manifest.stats.rhs_evals},
                {"jacobian_builds", manifest.stats.jacobian_builds}};
  j["wall_seconds"] = manifest.wall_seconds;
  j["aborted"] = manifest.aborted;
  if (manifest.aborted) j["abort_reason"] = manifest.abort_reason;
  if (!manifest.acceptance_lines.empty()) {
    j["acceptance"] = manifest.acceptance_lines;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  }
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

void emit_plot_script(const RunManifest& manifest,
                      const std::filesystem::path& path) {
  std::ostringstream out;
  out << "# gnuplot script generated by annuflow " << manifest.version << "\n";
  out << "set datafile separator ','\n";
  out << "set grid\n";
  out << "set key outside right\n";
  out << "set term pngcairo size 1000,760\n";

  const struct {
    const char* field;
    int column;
  } profiles[] = {{"v", 2}, {"w", 3}, {"c", 4}, {"mu", 5}};
  for (const auto& profile : profiles) {
    out << "\nset xlabel 'r'\n";
    out << "set ylabel '" << profile.field << "'\n";
    out << "set output 'profiles_" << profile.field << ".png'\n";
    out << "plot \\\n";
    for (std::size_t i = 0; i < manifest.snapshot_files.size(); ++i) {
      char label[64];
      std::snprintf(label, sizeof label, "%.10g",
                    i < manifest.cycles.size() ? manifest.cycles[i] : 0.0);
      out << "  '" << manifest.snapshot_files[i] << "' using 1:"
          << profile.column << " with lines title 'cycle " << label << "'";
      out << (i + 1 < manifest.snapshot_files.size() ? ", \\\n" : "\n");
    }
  }

  if (!manifest.centerline_file.empty()) {
    out << "\nset xlabel 'cycles'\n";
    out << "set ylabel 'mid-gap value'\n";
    out << "set output 'centerline.png'\n";
    out << "plot \\\n";
    out << "  '" << manifest.centerline_file
        << "' using 1:3 with linespoints title 'v(0.5)', \\\n";
    out << "  '" << manifest.centerline_file
        << "' using 1:4 with linespoints title 'w(0.5)', \\\n";
    out << "  '" << manifest.centerline_file
        << "' using 1:6 with linespoints title 'mu(0.5)'\n";
  }

  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  }
  file << out.str();
  if (!file) throw std::runtime_error("write failed for '" + path.string() + "'");
}

std::string snapshot_file_name(const std::string& prefix, double cycle) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", cycle);
  return prefix + "_cycle_" + buf + ".csv";
}

}  // namespace annuflow
