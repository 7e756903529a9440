#include "behavemine/config.hpp"

#include <fstream>
#include <sstream>

namespace behavemine {

std::map<std::string, std::string> parse_config_text(const std::string& text) {
  std::map<std::string, std::string> entries;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw SimulatorError("config line " + std::to_string(line_no) +
                           ": expected key=value");
    auto trim = [](std::string s) {
      std::size_t a = s.find_first_not_of(" \t");
      std::size_t b = s.find_last_not_of(" \t");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw SimulatorError("config line " + std::to_string(line_no) +
                           ": empty key");
    entries[key] = value;
  }
  return entries;
}

void apply_config(SimulationParams& params,
                  const std::map<std::string, std::string>& entries) {
  auto as_double = [](const std::string& key, const std::string& v) {
    try {
      return std::stod(v);
    } catch (...) {
      throw SimulatorError("config key '" + key + "': bad number '" + v + "'");
    }
  };
  for (const auto& [key, value] : entries) {
    if (key == "reactivity") params.reactivity = as_double(key, value);
    else if (key == "mouse_precision") params.mouse_precision = as_double(key, value);
    else if (key == "minimize") params.minimize = as_double(key, value);
    else if (key == "app_closing") params.app_closing = as_double(key, value);
    else if (key == "app_open_or_reopen")
      params.app_open_or_reopen = as_double(key, value);
    else if (key == "search") params.search = as_double(key, value);
    else if (key == "hotkey_usage") params.hotkey_usage = as_double(key, value);
    else if (key == "repetition") params.repetition = as_double(key, value);
    else if (key == "sequential") params.sequential = as_double(key, value);
    else if (key == "key_precision") params.key_precision = as_double(key, value);
    else if (key == "seed")
      params.seed = static_cast<std::uint64_t>(std::stoull(value));
    else if (key == "trace_count")
      params.trace_count = std::stoi(value);
    else
      throw SimulatorError("unknown config key '" + key + "'");
  }
  params.validate();
}

SimulationParams load_params_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SimulatorError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  SimulationParams params;
  apply_config(params, parse_config_text(buf.str()));
  return params;
}

}  // namespace behavemine
