#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "behavemine/event_model.hpp"

namespace behavemine {

class TranslationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two press/release click pairs within this window, in the same grid cell
// and with nothing in between, merge into one "mouse doubleclick".
inline constexpr std::int64_t kDoubleClickWindowMs = 400;

// A1..A8 events no more than this far apart collapse into one
// uncontrollable high-level event.
inline constexpr std::int64_t kBurstWindowMs = 150;

// Low-level to high-level translation:
//   - K1/K2 pairs become controllable "key <code>" events at press time
//   - K3/K4 pairs become "mouse click" / "mouse rightclick"; two adjacent
//     pairs in the same cell within the double-click window merge into
//     "mouse doubleclick"
//   - M events yield "mouse to x,y" on every cell change
//   - maximal bursts of A-events collapse into one uncontrollable event
//     named "<process> <action>" (path changes: "explorer path to <path>")
// Throws TranslationError (orphan A-event) when a process name cannot be
// resolved.
HighLevelTrace translate_trace(const LowLevelTrace& low);
HighLevelLog translate_log(const LowLevelLog& low);

struct IntraTask {
  std::vector<HighLevelEvent> controllables;
  HighLevelEvent terminator;
  bool synthetic_terminator = false;  // trailing controllables, no real u
  std::int64_t duration_ms = 0;
};

inline const char* kTraceEndName = "trace end";

// Partitions a high-level trace: each maximal run of controllables binds to
// the next uncontrollable event; trailing controllables get a synthetic
// "trace end" terminator.
std::vector<IntraTask> segment_intra_tasks(const HighLevelTrace& high);

// Ordered terminator names of the trace's intra tasks, synthetic trace-end
// excluded.
std::vector<std::string> inter_sequence(const HighLevelTrace& high);

}  // namespace behavemine
