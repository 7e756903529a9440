#include "behavemine/replay.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>

#include "behavemine/translator.hpp"

namespace behavemine {

namespace {

// Tracks first-enabled timestamps across marking changes; refreshed only for
// transitions whose input places were touched.
class EnableTracker {
 public:
  explicit EnableTracker(const PetriNet& pn)
      : pn_(pn),
        enabled_(pn.transition_count(), false),
        enable_time_(pn.transition_count(), 0),
        consumers_(pn.place_count()) {
    for (std::size_t t = 0; t < pn.transition_count(); ++t)
      for (std::size_t p : pn.inputs(t)) consumers_[p].push_back(t);
  }

  void reset(const Marking& m, std::int64_t now) {
    for (std::size_t t = 0; t < pn_.transition_count(); ++t) {
      enabled_[t] = enabled(pn_, m, t);
      if (enabled_[t]) enable_time_[t] = now;
    }
  }

  // `fired` transition moved the marking from before to after.
  void after_fire(const Marking& m, std::size_t fired, std::int64_t now) {
    std::set<std::size_t> touched;
    for (std::size_t p : pn_.inputs(fired))
      for (std::size_t t : consumers_[p]) touched.insert(t);
    for (std::size_t p : pn_.outputs(fired))
      for (std::size_t t : consumers_[p]) touched.insert(t);
    for (std::size_t t : touched) {
      bool en = enabled(pn_, m, t);
      if (en && !enabled_[t]) enable_time_[t] = now;
      enabled_[t] = en;
    }
  }

  std::int64_t enable_time(std::size_t t) const { return enable_time_[t]; }

 private:
  const PetriNet& pn_;
  std::vector<bool> enabled_;
  std::vector<std::int64_t> enable_time_;
  std::vector<std::vector<std::size_t>> consumers_;
};

// Cheapest firing sequence (invisible moves free, visible moves cost 1)
// after which `target` is enabled. Layered search: free closure over
// invisible firings, then one visible firing per layer, so the first hit is
// cost-minimal.
std::optional<std::vector<std::size_t>> find_enabling_sequence(
    const PetriNet& pn, const std::vector<std::vector<std::size_t>>& consumers,
    const Marking& start, std::size_t target, const ReplayOptions& options) {
  auto candidates = [&](const Marking& m) {
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < m.size(); ++p) {
      if (m[p] < 1) continue;
      for (std::size_t t : consumers[p])
        if (enabled(pn, m, t)) out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  struct Node {
    Marking marking;
    std::size_t parent;
    std::size_t via;
  };
  std::vector<Node> nodes;
  std::map<Marking, std::size_t> seen;
  nodes.push_back({start, 0, 0});
  seen.emplace(start, 0);

  auto path_from = [&](std::size_t idx) {
    std::vector<std::size_t> path;
    while (idx != 0) {
      path.push_back(nodes[idx].via);
      idx = nodes[idx].parent;
    }
    std::reverse(path.begin(), path.end());
    return path;
  };

  std::vector<std::size_t> layer{0};
  for (std::size_t depth = 0; depth <= options.search_depth; ++depth) {
    // Free closure over invisible transitions.
    std::deque<std::size_t> frontier(layer.begin(), layer.end());
    while (!frontier.empty()) {
      std::size_t idx = frontier.front();
      frontier.pop_front();
      const Marking current = nodes[idx].marking;  // copy: nodes reallocate
      for (std::size_t t : candidates(current)) {
        if (!pn.transition(t).invisible) continue;
        Marking next = fire(pn, current, t);
        if (seen.count(next)) continue;
        if (nodes.size() >= options.max_search_states) return std::nullopt;
        seen.emplace(next, nodes.size());
        nodes.push_back({std::move(next), idx, t});
        layer.push_back(nodes.size() - 1);
        frontier.push_back(nodes.size() - 1);
      }
    }
    for (std::size_t idx : layer) {
      if (enabled(pn, nodes[idx].marking, target)) return path_from(idx);
    }
    if (depth == options.search_depth) break;
    // One visible firing into the next layer.
    std::vector<std::size_t> next_layer;
    for (std::size_t idx : layer) {
      const Marking current = nodes[idx].marking;
      for (std::size_t t : candidates(current)) {
        if (pn.transition(t).invisible || t == target) continue;
        Marking next = fire(pn, current, t);
        if (seen.count(next)) continue;
        if (nodes.size() >= options.max_search_states) return std::nullopt;
        seen.emplace(next, nodes.size());
        nodes.push_back({std::move(next), idx, t});
        next_layer.push_back(nodes.size() - 1);
      }
    }
    if (next_layer.empty()) break;
    layer = std::move(next_layer);
  }
  return std::nullopt;
}

std::int64_t visible_count(const PetriNet& pn, const std::vector<std::size_t>& path) {
  std::int64_t n = 0;
  for (std::size_t t : path)
    if (!pn.transition(t).invisible) ++n;
  return n;
}

}  // namespace

ReplayResult replay_trace(const PetriNet& pn, const HighLevelTrace& trace,
                          const ReplayOptions& options) {
  ReplayResult result;
  Marking marking = pn.initial_marking();
  EnableTracker tracker(pn);
  tracker.reset(marking, 0);
  std::vector<std::vector<std::size_t>> consumers(pn.place_count());
  for (std::size_t t = 0; t < pn.transition_count(); ++t)
    for (std::size_t p : pn.inputs(t)) consumers[p].push_back(t);

  for (const auto& event : trace.events) {
    EventMove move;
    auto t = pn.transition_by_label(event.name);
    if (!t) {
      move.unmatched_label = true;
      result.cost += 1;
      result.per_event_moves.push_back(std::move(move));
      continue;
    }
    if (!enabled(pn, marking, *t)) {
      auto path = find_enabling_sequence(pn, consumers, marking, *t, options);
      if (!path) {
        move.search_failed = true;
        result.search_bound_exceeded = true;
        result.cost += options.fallback_penalty;
        result.per_event_moves.push_back(std::move(move));
        continue;
      }
      for (std::size_t step : *path) {
        marking = fire(pn, marking, step);
        tracker.after_fire(marking, step, event.timestamp_ms);
        move.model_moves.push_back(step);
      }
      result.cost += visible_count(pn, *path);
    }
    result.enabling_records.push_back(
        {*t, tracker.enable_time(*t), event.timestamp_ms});
    marking = fire(pn, marking, *t);
    tracker.after_fire(marking, *t, event.timestamp_ms);
    move.fired = *t;
    result.per_event_moves.push_back(std::move(move));
  }

  if (trace.events.empty()) {
    result.fitness = 1.0;
  } else {
    result.fitness = std::max(
        0.0, 1.0 - static_cast<double>(result.cost) /
                       static_cast<double>(trace.events.size()));
  }
  return result;
}

double log_fitness(const PetriNet& pn, const HighLevelLog& log,
                   const ReplayOptions& options) {
  if (log.traces.empty()) throw ReplayError("empty log");
  double total = 0.0;
  for (const auto& trace : log.traces)
    total += replay_trace(pn, trace, options).fitness;
  return total / static_cast<double>(log.traces.size());
}

std::map<std::string, TransitionStats> enabling_stats(
    const PetriNet& pn, const HighLevelLog& log, const ReplayOptions& options) {
  if (log.traces.empty()) throw ReplayError("empty log");
  std::map<std::size_t, std::pair<std::int64_t, std::int64_t>> acc;  // fires, gap sum
  for (const auto& trace : log.traces) {
    auto result = replay_trace(pn, trace, options);
    for (const auto& rec : result.enabling_records) {
      auto& [fires, gap_sum] = acc[rec.transition];
      ++fires;
      gap_sum += rec.fire_time_ms - rec.enable_time_ms;
    }
  }
  std::map<std::string, TransitionStats> stats;
  for (const auto& [t, entry] : acc) {
    const auto& def = pn.transition(t);
    std::string key = def.label ? *def.label : def.id;
    TransitionStats s;
    s.fire_count = entry.first;
    s.mean_enable_to_fire_ms =
        static_cast<double>(entry.second) / static_cast<double>(entry.first);
    s.firing_frequency =
        static_cast<double>(entry.first) / static_cast<double>(log.traces.size());
    stats[key] = s;
  }
  return stats;
}

double measure_reactivity(const HighLevelLog& log) {
  std::int64_t total = 0;
  std::int64_t count = 0;
  for (const auto& trace : log.traces) {
    for (const auto& task : segment_intra_tasks(trace)) {
      for (std::size_t i = 1; i < task.controllables.size(); ++i) {
        total += task.controllables[i].timestamp_ms -
                 task.controllables[i - 1].timestamp_ms;
        ++count;
      }
    }
  }
  if (count == 0)
    throw ReplayError("no consecutive controllable pairs in any intra task");
  return static_cast<double>(total) / static_cast<double>(count);
}

double measure_mouse_precision(const LowLevelLog& log) {
  double sum = 0.0;
  std::size_t runs = 0;
  for (const auto& trace : log.traces) {
    std::size_t i = 0;
    const auto& ev = trace.events;
    while (i < ev.size()) {
      if (ev[i].key != EventKey::kM) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j + 1 < ev.size() && ev[j + 1].key == EventKey::kM) ++j;
      // run [i..j]
      int actual = 0;
      for (std::size_t k = i + 1; k <= j; ++k) {
        if (ev[k].params[0] != ev[k - 1].params[0] ||
            ev[k].params[1] != ev[k - 1].params[1])
          ++actual;
      }
      if (actual > 0) {
        int x0 = std::stoi(ev[i].params[0]), y0 = std::stoi(ev[i].params[1]);
        int x1 = std::stoi(ev[j].params[0]), y1 = std::stoi(ev[j].params[1]);
        int shortest = std::max(std::abs(x1 - x0), std::abs(y1 - y0));
        sum += static_cast<double>(shortest) / static_cast<double>(actual);
        ++runs;
      }
      i = j + 1;
    }
  }
  if (runs == 0) throw ReplayError("no mouse-movement runs in log");
  return sum / static_cast<double>(runs);
}

}  // namespace behavemine
