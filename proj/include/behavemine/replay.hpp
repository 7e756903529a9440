#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "behavemine/event_model.hpp"
#include "behavemine/petri_net.hpp"

namespace behavemine {

class ReplayError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ReplayOptions {
  // Per-event breadth-first search depth over model moves; on a miss the
  // fallback penalty is charged and the marking stays put.
  std::size_t search_depth = 50;
  std::int64_t fallback_penalty = 50;
  std::size_t max_search_states = 250000;
};

struct EventMove {
  std::optional<std::size_t> fired;         // transition index, if any
  std::vector<std::size_t> model_moves;     // transitions fired to enable it
  bool unmatched_label = false;             // no transition carries the label
  bool search_failed = false;               // depth cap hit, penalty charged
};

struct EnablingRecord {
  std::size_t transition = 0;
  std::int64_t enable_time_ms = 0;
  std::int64_t fire_time_ms = 0;
};

struct ReplayResult {
  std::vector<EventMove> per_event_moves;
  std::int64_t cost = 0;
  double fitness = 1.0;
  std::vector<EnablingRecord> enabling_records;
  bool search_bound_exceeded = false;
};

// Move-on-model token replay: log events are never skipped; deviations cost
// model moves (1 per fired transition, invisible included). Events whose
// label is absent from the net cost a fixed penalty of 1 and do not touch
// the marking.
ReplayResult replay_trace(const PetriNet& pn, const HighLevelTrace& trace,
                          const ReplayOptions& options = {});

// Arithmetic mean of per-trace fitness. Throws ReplayError on an empty log.
double log_fitness(const PetriNet& pn, const HighLevelLog& log,
                   const ReplayOptions& options = {});

struct TransitionStats {
  double mean_enable_to_fire_ms = 0.0;
  double firing_frequency = 0.0;  // fires per trace
  std::int64_t fire_count = 0;
};

// Per-transition enabling-to-firing gap and firing frequency, aggregated
// over a whole log. Never-fired transitions are absent.
std::map<std::string, TransitionStats> enabling_stats(
    const PetriNet& pn, const HighLevelLog& log, const ReplayOptions& options = {});

// Mean time between consecutive controllable events within one intra task,
// across all traces. Throws ReplayError when the log has no such pair.
double measure_reactivity(const HighLevelLog& log);

// Mean over maximal mouse-movement runs of (Chebyshev shortest / actual
// cell transitions). Runs without a cell transition are skipped. Throws
// ReplayError when the log has no usable run.
double measure_mouse_precision(const LowLevelLog& log);

struct MetricsReport {
  double user_fitness = 0.0;
  double optimal_fitness = 0.0;
  double reactivity_ms = 0.0;
  double mouse_precision = 0.0;
};

}  // namespace behavemine
