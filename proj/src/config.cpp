#include "annuflow/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace annuflow {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double parse_number(const std::string& value, const std::string& key, int line) {
  try {
    size_t used = 0;
    const double x = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument("trailing text");
    return x;
  } catch (const std::exception&) {
    throw ConfigError("value '" + value + "' for key '" + key +
                          "' is not a number",
                      line);
  }
}

int parse_int(const std::string& value, const std::string& key, int line) {
  try {
    size_t used = 0;
    const int x = std::stoi(value, &used);
    if (used != value.size()) throw std::invalid_argument("trailing text");
    return x;
  } catch (const std::exception&) {
    throw ConfigError("value '" + value + "' for key '" + key +
                          "' is not an integer",
                      line);
  }
}

struct Entry {
  std::string value;
  int line;
};

using Section = std::map<std::string, Entry>;

const std::set<std::string> kSections = {"model",      "geometry", "nondim",
                                         "grid",       "integrator", "bc",
                                         "output"};

const std::map<std::string, std::set<std::string>> kKeys = {
    {"model", {"model", "alpha", "beta", "gamma", "sigma", "n"}},
    {"geometry",
     {"r_i", "r_o", "omega_bar", "f_theta", "f_z", "a_grad", "b_grad", "rho_f",
      "mu0_bar", "d_c"}},
    {"nondim", {"re", "pe", "p_f", "p_g", "p_beta", "p_gamma", "p_a", "p_b"}},
    {"grid", {"n_nodes"}},
    {"integrator",
     {"rel_tol", "abs_tol", "newton_tol", "max_newton", "dt_init", "dt_max",
      "safety"}},
    {"bc", {"mode", "c_tilde", "c_bar", "r_bar_hat", "wall", "wall_value"}},
    {"output", {"cycles", "prefix"}},
};

}  // namespace

ParsedConfig parse_config(const std::string& text) {
  std::map<std::string, Section> sections;
  ParsedConfig parsed;

  std::istringstream stream(text);
  std::string raw;
  std::string current_section;
  int line_no = 0;
  while (std::getline(stream, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigError("unterminated section header", line_no);
      }
      current_section = trim(line.substr(1, line.size() - 2));
      if (kSections.count(current_section) == 0) {
        throw ConfigError("unknown section [" + current_section + "]", line_no);
      }
      sections[current_section];  // may legitimately stay empty
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("expected 'key = value'", line_no);
    }
    if (current_section.empty()) {
      throw ConfigError("key outside any [section]", line_no);
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ConfigError("expected 'key = value'", line_no);
    }
    if (kKeys.at(current_section).count(key) == 0) {
      throw ConfigError("unknown key '" + key + "' in [" + current_section + "]",
                        line_no);
    }
    auto [it, inserted] = sections[current_section].insert({key, {value, line_no}});
    if (!inserted) {
      throw ConfigError("duplicate key '" + key + "'", line_no);
    }
    parsed.entries.push_back({current_section, key, value});
  }

  StudyConfig& study = parsed.study;

  // [model]
  const auto model_section = sections.find("model");
  if (model_section == sections.end() ||
      model_section->second.count("model") == 0) {
    throw ConfigError("missing [model] section with a 'model' key", 0);
  }
  {
    const Entry& entry = model_section->second.at("model");
    std::string name = entry.value;
    std::transform(name.begin(), name.end(), name.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (name == "newtonian") study.model = builtin_model(ModelKind::Newtonian);
    else if (name == "model1") study.model = builtin_model(ModelKind::Model1);
    else if (name == "model2a") study.model = builtin_model(ModelKind::Model2a);
    else if (name == "model2b") study.model = builtin_model(ModelKind::Model2b);
    else throw ConfigError("unknown model '" + entry.value + "'", entry.line);
    for (const auto& [key, e] : model_section->second) {
      if (key == "model") continue;
      const double x = parse_number(e.value, key, e.line);
      if (key == "alpha") study.model.alpha = x;
      else if (key == "beta") study.model.beta = x;
      else if (key == "gamma") study.model.gamma = x;
      else if (key == "sigma") study.model.sigma = x;
      else if (key == "n") study.model.n_const = x;
    }
    const ValidationReport report = validate(study.model);
    if (!report.ok()) {
      std::string msg = "constitutive parameters rejected:";
      for (const auto& v : report.violations) msg += " " + v;
      throw ConfigError(msg, entry.line);
    }
  }

  // Exactly one parameter group.
  const bool has_geometry = sections.count("geometry") > 0;
  const bool has_nondim = sections.count("nondim") > 0;
  if (has_geometry == has_nondim) {
    throw ConfigError(
        "exactly one of [geometry] and [nondim] must be present", 0);
  }

  auto require = [](const Section& section, const char* key,
                    const char* section_name) -> const Entry& {
    const auto it = section.find(key);
    if (it == section.end()) {
      throw ConfigError(std::string("missing key '") + key + "' in [" +
                            section_name + "]",
                        0);
    }
    return it->second;
  };

  if (has_geometry) {
    const Section& s = sections.at("geometry");
    PhysicalInputs in;
    auto num = [&](const char* key) {
      const Entry& e = require(s, key, "geometry");
      return parse_number(e.value, key, e.line);
    };
    in.r_i = num("r_i");
    in.r_o = num("r_o");
    in.omega_bar = num("omega_bar");
    in.f_theta = num("f_theta");
    in.f_z = num("f_z");
    in.a_grad = num("a_grad");
    in.b_grad = num("b_grad");
    in.rho_f = num("rho_f");
    in.mu0_bar = num("mu0_bar");
    in.d_c = num("d_c");
    study.physical = in;
  } else {
    const Section& s = sections.at("nondim");
    NondimParams p;
    auto num = [&](const char* key) {
      const Entry& e = require(s, key, "nondim");
      return parse_number(e.value, key, e.line);
    };
    p.re = num("re");
    p.pe = num("pe");
    p.p_f = num("p_f");
    p.p_g = num("p_g");
    p.p_beta = num("p_beta");
    p.p_gamma = num("p_gamma");
    p.p_a = num("p_a");
    p.p_b = num("p_b");
    try {
      validate(p);
    } catch (const std::invalid_argument& err) {
      throw ConfigError(err.what(), 0);
    }
    study.nondim = p;
  }

  if (sections.count("grid") > 0) {
    const Section& s = sections.at("grid");
    if (s.count("n_nodes") > 0) {
      const Entry& e = s.at("n_nodes");
      study.n_nodes = parse_int(e.value, "n_nodes", e.line);
      if (study.n_nodes < 5) throw ConfigError("n_nodes must be >= 5", e.line);
    }
  }

  if (sections.count("integrator") > 0) {
    const Section& s = sections.at("integrator");
    for (const auto& [key, e] : s) {
      if (key == "max_newton") {
        study.integrator.max_newton = parse_int(e.value, key, e.line);
        continue;
      }
      const double x = parse_number(e.value, key, e.line);
      if (key == "rel_tol") study.integrator.rel_tol = x;
      else if (key == "abs_tol") study.integrator.abs_tol = x;
      else if (key == "newton_tol") study.integrator.newton_tol = x;
      else if (key == "dt_init") study.integrator.dt_init = x;
      else if (key == "dt_max") study.integrator.dt_max = x;
      else if (key == "safety") study.integrator.safety = x;
    }
    try {
      validate(study.integrator);
    } catch (const std::invalid_argument& err) {
      throw ConfigError(err.what(), 0);
    }
  }

  if (sections.count("bc") > 0) {
    const Section& s = sections.at("bc");
    for (const auto& [key, e] : s) {
      if (key == "mode") {
        if (e.value == "ramp") study.bc.kind = BcKind::Ramp;
        else if (e.value == "feedback") study.bc.kind = BcKind::FeedbackSwitch;
        else throw ConfigError("unknown bc mode '" + e.value + "'", e.line);
      } else if (key == "wall") {
        if (e.value == "oscillating") study.wall = WallDrive::oscillating();
        else if (e.value == "constant") {
          study.wall.kind = WallDrive::Kind::Constant;
        } else {
          throw ConfigError("unknown wall drive '" + e.value + "'", e.line);
        }
      } else {
        const double x = parse_number(e.value, key, e.line);
        if (key == "c_tilde") study.bc.c_tilde = x;
        else if (key == "c_bar") study.bc.c_bar = x;
        else if (key == "r_bar_hat") study.bc.r_bar_hat = x;
        else if (key == "wall_value") study.wall.constant_value = x;
      }
    }
  }

  {
    const auto output_section = sections.find("output");
    if (output_section == sections.end() ||
        output_section->second.count("cycles") == 0) {
      throw ConfigError("missing [output] section with a 'cycles' key", 0);
    }
    const Entry& e = output_section->second.at("cycles");
    std::stringstream list(e.value);
    std::string item;
    while (std::getline(list, item, ',')) {
      const std::string token = trim(item);
      if (token.empty()) {
        throw ConfigError("empty entry in cycles list", e.line);
      }
      study.cycles.push_back(parse_number(token, "cycles", e.line));
    }
  }

  try {
    validate(study);
  } catch (const std::invalid_argument& err) {
    throw ConfigError(err.what(), 0);
  }
  return parsed;
}

ParsedConfig load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file '" + path + "'", 0);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

}  // namespace annuflow
