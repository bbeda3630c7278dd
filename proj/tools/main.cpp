#include <glob.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "annuflow/acceptance.hpp"
#include "annuflow/config.hpp"
#include "annuflow/snapshot_io.hpp"
#include "annuflow/version.hpp"

namespace fs = std::filesystem;
using namespace annuflow;

namespace {

// Exit codes: 0 success, 1 usage/config error, 2 numerical failure, 3 I/O.
constexpr int kOk = 0;
constexpr int kConfigError = 1;
constexpr int kNumericalError = 2;
constexpr int kIoError = 3;

std::mutex print_mutex;

int run_study_to_dir(const std::string& config_path, const fs::path& out_dir,
                     bool quiet) {
  ParsedConfig parsed;
  try {
    parsed = load_config_file(config_path);
  } catch (const ConfigError& err) {
    std::lock_guard<std::mutex> lock(print_mutex);
    std::cerr << config_path << ": " << err.what() << "\n";
    return kConfigError;
  }

  std::string prefix = "snap";
  for (const auto& entry : parsed.entries) {
    if (entry[0] == "output" && entry[1] == "prefix") prefix = entry[2];
  }

  RunResult result;
  try {
    result = run(parsed.study);
  } catch (const std::exception& err) {
    std::lock_guard<std::mutex> lock(print_mutex);
    std::cerr << config_path << ": " << err.what() << "\n";
    return kNumericalError;
  }

  try {
    fs::create_directories(out_dir);
    RunManifest manifest;
    manifest.version = kVersion;
    manifest.config_echo = parsed.entries;
    manifest.stats = result.stats;
    manifest.wall_seconds = result.wall_seconds;
    manifest.aborted = result.aborted;
    manifest.abort_reason = result.abort_reason;
    for (const Snapshot& snap : result.snapshots) {
      const std::string name = snapshot_file_name(prefix, snap.cycle);
      write_snapshot_csv(snap, result.grid, out_dir / name);
      manifest.snapshot_files.push_back(name);
      manifest.cycles.push_back(snap.cycle);
    }
    write_centerline_csv(result, out_dir / "centerline.csv");
    manifest.centerline_file = "centerline.csv";
    manifest.plot_script_file = "plot.gp";
    emit_plot_script(manifest, out_dir / "plot.gp");
    write_manifest(manifest, out_dir / "run.json");
  } catch (const std::exception& err) {
    std::lock_guard<std::mutex> lock(print_mutex);
    std::cerr << config_path << ": " << err.what() << "\n";
    return kIoError;
  }

  {
    std::lock_guard<std::mutex> lock(print_mutex);
    if (!quiet) {
      std::cout << config_path << ": " << result.snapshots.size()
                << " snapshots -> " << out_dir.string() << " ("
                << result.stats.accepted_steps << " steps, "
                << result.wall_seconds << " s)"
                << (result.aborted ? " [ABORTED: " + result.abort_reason + "]"
                                   : "")
                << "\n";
    }
  }
  return result.aborted ? kNumericalError : kOk;
}

std::vector<std::string> expand_globs(const std::vector<std::string>& patterns) {
  std::vector<std::string> paths;
  for (const std::string& pattern : patterns) {
    glob_t matches{};
    const int rc = glob(pattern.c_str(), GLOB_TILDE, nullptr, &matches);
    if (rc == 0) {
      for (std::size_t i = 0; i < matches.gl_pathc; ++i) {
        paths.emplace_back(matches.gl_pathv[i]);
      }
    }
    globfree(&matches);
  }
  return paths;
}

int sweep_parallelism(std::size_t jobs) {
  unsigned threads = std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  if (const char* env = std::getenv("ANNUFLOW_THREADS")) {
    const long requested = std::strtol(env, nullptr, 10);
    if (requested >= 1) threads = static_cast<unsigned>(requested);
  }
  return static_cast<int>(std::min<std::size_t>(threads, jobs));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"annuflow: shear-thinning reacting mixture flow in an annular "
               "gap"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = "annuflow_out";
  bool fast = false;
  std::vector<std::string> patterns;

  CLI::App* cmd_run =
      app.add_subcommand("run", "integrate one study and write snapshot CSVs");
  cmd_run->add_option("config", config_path, "study config file")->required();
  cmd_run->add_option("--out", out_dir, "output directory");

  CLI::App* cmd_verify =
      app.add_subcommand("verify", "run the oracle-based verification suite");
  cmd_verify->add_flag("--fast", fast,
                       "reduced-size checks, finishes in under a minute");
  std::string verify_out;
  cmd_verify->add_option("--out", verify_out,
                         "also write the verification report as run.json");

  CLI::App* cmd_sweep = app.add_subcommand(
      "sweep", "run every config matching the glob patterns");
  cmd_sweep->add_option("globs", patterns, "config globs")->required();
  cmd_sweep->add_option("--out", out_dir, "root output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kOk : kConfigError;
  }

  if (cmd_run->parsed()) {
    return run_study_to_dir(config_path, out_dir, false);
  }

  if (cmd_verify->parsed()) {
    const auto results = acceptance::run_all(fast, &std::cout);
    const bool ok = acceptance::all_passed(results);
    if (!verify_out.empty()) {
      try {
        fs::create_directories(verify_out);
        RunManifest manifest;
        manifest.version = kVersion;
        for (const auto& result : results) {
          manifest.acceptance_lines.push_back(acceptance::format_line(result));
        }
        write_manifest(manifest, fs::path(verify_out) / "run.json");
      } catch (const std::exception& err) {
        std::cerr << err.what() << "\n";
        return kIoError;
      }
    }
    std::cout << (ok ? "all criteria passed" : "verification FAILED") << "\n";
    return ok ? kOk : kNumericalError;
  }

  // sweep
  const std::vector<std::string> configs = expand_globs(patterns);
  if (configs.empty()) {
    std::cerr << "no configs match the given patterns\n";
    return kConfigError;
  }
  const int workers = sweep_parallelism(configs.size());
  std::atomic<std::size_t> next{0};
  std::atomic<int> worst{kOk};
  std::vector<std::thread> pool;
  for (int k = 0; k < workers; ++k) {
    pool.emplace_back([&]() {
      while (true) {
        const std::size_t index = next.fetch_add(1);
        if (index >= configs.size()) break;
        const fs::path stem = fs::path(configs[index]).stem();
        const int code =
            run_study_to_dir(configs[index], fs::path(out_dir) / stem, false);
        int prev = worst.load();
        while (code > prev && !worst.compare_exchange_weak(prev, code)) {
        }
      }
    });
  }
  for (std::thread& worker : pool) worker.join();
  return worst.load();
}
