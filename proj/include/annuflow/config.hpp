#ifndef ANNUFLOW_CONFIG_HPP
#define ANNUFLOW_CONFIG_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "annuflow/orchestrator.hpp"

namespace annuflow {

/// Config rejection; line is 0 for cross-key validation failures.
class ConfigError : public std::runtime_error {
public:
  ConfigError(const std::string& what, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                    : what),
        line(line) {}
  int line = 0;
};

struct ParsedConfig {
  StudyConfig study;
  // Section/key/value triples in file order, echoed into the run manifest.
  std::vector<std::array<std::string, 3>> entries;
};

/// Parses the flat `[section]` / `key = value` study format. Unknown
/// sections or keys, duplicate keys, malformed numbers, and inconsistent
/// parameter groups are all hard errors.
ParsedConfig parse_config(const std::string& text);

/// Convenience wrapper: reads the file and parses it.
ParsedConfig load_config_file(const std::string& path);

}  // namespace annuflow

#endif
