#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "annuflow/snapshot_io.hpp"
#include "annuflow/version.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace annuflow;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "annuflow_io_test";
  fs::create_directories(dir);
  return dir;
}

Snapshot fabricated_snapshot(const RadialGrid& grid, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> uni(-2.0, 2.0);
  Snapshot snap;
  snap.t_hat = 21.99114857512855;
  snap.cycle = 3.5;
  snap.v.resize(grid.n_nodes);
  snap.w.resize(grid.n_nodes);
  snap.c.resize(grid.n_nodes);
  snap.mu.resize(grid.n_nodes);
  snap.h.resize(grid.n_nodes);
  for (int j = 0; j < grid.n_nodes; ++j) {
    snap.v[j] = uni(rng);
    snap.w[j] = uni(rng);
    snap.c[j] = 0.1 + 0.05 * (uni(rng) + 2.0);
    snap.mu[j] = 1.0 + std::abs(uni(rng));
    snap.h[j] = std::abs(uni(rng));
  }
  return snap;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("snapshot csv round-trips bitwise") {
  const RadialGrid grid = build_grid(33, 5.0);
  const Snapshot snap = fabricated_snapshot(grid, 77);
  const fs::path path = scratch_dir() / "roundtrip.csv";
  write_snapshot_csv(snap, grid, path);

  const std::string text = slurp(path);
  CHECK(text.rfind("r_hat,v_hat,w_hat,c_hat,mu_hat,h_hat\n", 0) == 0);
  CHECK(text.find('\r') == std::string::npos);  // LF only
  // header + one row per node
  CHECK(std::count(text.begin(), text.end(), '\n') == grid.n_nodes + 1);

  const SnapshotTable table = read_snapshot_csv(path);
  REQUIRE(table.r.size() == grid.n_nodes);
  for (int j = 0; j < grid.n_nodes; ++j) {
    CHECK(table.r[j] == grid.node(j));
    CHECK(table.v[j] == snap.v[j]);
    CHECK(table.w[j] == snap.w[j]);
    CHECK(table.c[j] == snap.c[j]);
    CHECK(table.mu[j] == snap.mu[j]);
    CHECK(table.h[j] == snap.h[j]);
  }
}

TEST_CASE("initial snapshot first row") {
  const RadialGrid grid = build_grid(5, 5.0);
  Snapshot snap;
  snap.t_hat = 0.0;
  snap.cycle = 0.0;
  snap.v = Vector::Zero(5);
  snap.w = Vector::Zero(5);
  snap.c = Vector::Constant(5, 0.1);
  snap.mu = Vector::Constant(5, 8.4148668114401293);
  snap.h = Vector::Zero(5);
  const fs::path path = scratch_dir() / "initial.csv";
  write_snapshot_csv(snap, grid, path);
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);  // header
  std::getline(in, line);
  CHECK(line == "0,0,0,0.10000000000000001,8.4148668114401293,0");
}

TEST_CASE("manifest json fields") {
  RunManifest manifest;
  manifest.version = kVersion;
  manifest.config_echo = {{"model", "model", "model1"}};
  manifest.cycles = {3.5, 12.5};
  manifest.snapshot_files = {"snap_cycle_3.5.csv", "snap_cycle_12.5.csv"};
  manifest.centerline_file = "centerline.csv";
  manifest.plot_script_file = "plot.gp";
  manifest.stats.accepted_steps = 42;
  manifest.wall_seconds = 1.25;

  const fs::path path = scratch_dir() / "run.json";
  write_manifest(manifest, path);
  const nlohmann::json j = nlohmann::json::parse(slurp(path));
  CHECK(j["version"] == kVersion);
  CHECK(j["config"][0]["key"] == "model");
  CHECK(j["snapshots"].size() == 2);
  CHECK(j["stats"]["accepted_steps"] == 42);
  CHECK(j["aborted"] == false);
  CHECK_FALSE(j.contains("acceptance"));
}

TEST_CASE("snapshot file names") {
  CHECK(snapshot_file_name("snap", 3.5) == "snap_cycle_3.5.csv");
  CHECK(snapshot_file_name("out", 0.0) == "out_cycle_0.csv");
  CHECK(snapshot_file_name("snap", 12.25) == "snap_cycle_12.25.csv");
}

TEST_CASE("plot scripts match the golden copies") {
  const fs::path golden_dir = fs::path(TEST_DATA_DIR) / "golden";

  RunManifest nograd;
  nograd.version = "0.1.0";
  nograd.cycles = {3.5, 12.5, 34.5};
  nograd.snapshot_files = {"snap_cycle_3.5.csv", "snap_cycle_12.5.csv",
                           "snap_cycle_34.5.csv"};
  nograd.centerline_file = "centerline.csv";

  RunManifest gradient = nograd;
  gradient.snapshot_files = {"grad_cycle_3.5.csv", "grad_cycle_12.5.csv",
                             "grad_cycle_34.5.csv"};

  RunManifest single;
  single.version = "0.1.0";
  single.cycles = {2.0};
  single.snapshot_files = {"snap_cycle_2.csv"};
  single.centerline_file = "centerline.csv";

  const struct {
    const RunManifest* manifest;
    const char* golden;
  } cases[] = {{&nograd, "plot_nograd.gp"},
               {&gradient, "plot_gradient.gp"},
               {&single, "plot_single.gp"}};
  for (const auto& test_case : cases) {
    const fs::path out = scratch_dir() / test_case.golden;
    emit_plot_script(*test_case.manifest, out);
    CHECK(slurp(out) == slurp(golden_dir / test_case.golden));
  }
}
