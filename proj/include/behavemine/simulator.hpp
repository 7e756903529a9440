#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "behavemine/event_model.hpp"
#include "behavemine/rng.hpp"

namespace behavemine {

class SimulatorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Nine behavior likelihoods plus the keyboard analogue of mouse precision
// (drives typo/backspace insertions). All in [0,1].
struct SimulationParams {
  double reactivity = 1.0;
  double mouse_precision = 1.0;
  double minimize = 0.0;
  double app_closing = 0.0;
  double app_open_or_reopen = 0.0;  // likelihood of opening a new instance
  double search = 0.0;              // search box vs. browsing
  double hotkey_usage = 1.0;
  double repetition = 0.0;
  double sequential = 1.0;
  double key_precision = 1.0;

  std::uint64_t seed = 1;
  int trace_count = 825;

  void validate() const;
};

enum class Profile { kOptimal, kUser1, kUser2, kUser3, kUser4, kUser5 };

std::optional<Profile> profile_from_string(const std::string& name);
const char* to_string(Profile profile);

// Parameter presets for the modeled behaviors. The optimal profile is fully
// deterministic in its event sequence (gates at 0/1); user profiles draw
// their gates at 0.05/0.95. Reactivity maps to the inter-event delay median
// 328 + (1 - reactivity) * 900 ms.
SimulationParams preset(Profile profile);

// Expected inter-event delay median for a reactivity value.
double reactivity_median_ms(double reactivity);

// Declarative view of the summary-task scenario (used by tests and docs;
// the generator itself drives these subtasks with full app state).
struct SubtaskInfo {
  std::string name;
  std::string gate;              // gating parameter name, empty when ungated
  std::vector<std::size_t> deps; // indices into the subtask list
  std::string terminator;        // primary uncontrollable event family
};

struct ScenarioModel {
  std::vector<SubtaskInfo> subtasks;
};

const ScenarioModel& summary_scenario();

// Generates trace_count traces of the summary task. Identical params
// (including seed) give byte-identical serialized logs; each trace draws its
// randomness from (seed, trace index) only.
LowLevelLog simulate_log(const SimulationParams& params,
                         const std::string& trace_label = "user");

// Realizes one subtask in isolation (default app state) and returns its
// low-level events. Gate draws come from `rng`.
std::vector<LowLevelEvent> realize_subtask(std::size_t subtask_index,
                                           const SimulationParams& params,
                                           Rng& rng);

}  // namespace behavemine
