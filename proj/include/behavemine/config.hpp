#pragma once

#include <map>
#include <string>

#include "behavemine/simulator.hpp"

namespace behavemine {

// key=value per line, '#' comments. Unknown keys are rejected.
std::map<std::string, std::string> parse_config_text(const std::string& text);

// Applies recognized keys (the nine likelihoods, key_precision, seed,
// trace_count) onto params. Throws SimulatorError on unknown keys or bad
// values.
void apply_config(SimulationParams& params,
                  const std::map<std::string, std::string>& entries);

SimulationParams load_params_file(const std::string& path);

}  // namespace behavemine
