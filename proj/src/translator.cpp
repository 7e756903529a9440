#include "behavemine/translator.hpp"

#include <algorithm>
#include <optional>

namespace behavemine {

namespace {

struct Cell {
  int x = 0, y = 0;
  bool operator==(const Cell&) const = default;
};

Cell cell_of(const LowLevelEvent& e, std::size_t first_coord) {
  return {std::stoi(e.params[first_coord]), std::stoi(e.params[first_coord + 1])};
}

// Burst naming priority: semantically strongest key wins when a burst mixes
// several A-kinds (an app close outranks the focus shuffle it causes).
int burst_priority(EventKey key) {
  switch (key) {
    case EventKey::kA2: return 7;
    case EventKey::kA1: return 6;
    case EventKey::kA8: return 5;
    case EventKey::kA3: return 4;
    case EventKey::kA4: return 3;
    case EventKey::kA5: return 2;
    case EventKey::kA7: return 1;
    case EventKey::kA6: return 0;
    default: return -1;
  }
}

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::string process_of(const LowLevelEvent& e) {
  switch (e.key) {
    case EventKey::kA1: case EventKey::kA2: case EventKey::kA3:
    case EventKey::kA4: case EventKey::kA5: case EventKey::kA6:
      return lowercase(e.params[1]);
    case EventKey::kA7: {
      // First hierarchy entry is the focused window: "PID#ProcessName".
      auto pos = e.params[0].find('#');
      if (pos == std::string::npos || pos + 1 >= e.params[0].size()) return "";
      return lowercase(e.params[0].substr(pos + 1));
    }
    default:
      return "";
  }
}

std::string burst_name(const LowLevelEvent& e) {
  if (e.key == EventKey::kA8) return "explorer path to " + e.params[2];
  std::string proc = process_of(e);
  if (proc.empty())
    throw TranslationError("orphan A-event: no resolvable process name for " +
                           std::string(to_string(e.key)));
  switch (e.key) {
    case EventKey::kA1: return proc + " open";
    case EventKey::kA2: return proc + " close";
    case EventKey::kA3: return proc + " maximize";
    case EventKey::kA4: return proc + " minimize";
    case EventKey::kA5: return proc + " title change";
    case EventKey::kA6: return proc + " move";
    case EventKey::kA7: return proc + " focus";
    default: return proc;
  }
}

}  // namespace

HighLevelTrace translate_trace(const LowLevelTrace& low) {
  HighLevelTrace high;
  high.id = low.id;
  const auto& ev = low.events;

  std::optional<Cell> last_mouse_cell;
  // Pending single click, kept one step behind emission so a second pair can
  // upgrade it to a doubleclick.
  struct PendingClick {
    std::size_t out_index;
    Cell cell;
    std::int64_t press_ts;
    std::string button;
  };
  std::optional<PendingClick> pending_click;

  auto emit = [&](HighLevelEvent e) {
    high.events.push_back(std::move(e));
  };

  std::size_t i = 0;
  while (i < ev.size()) {
    const auto& e = ev[i];
    if (is_app_event(e.key)) {
      // Collect the maximal burst of A-events within the gap window.
      std::size_t j = i;
      std::size_t best = i;
      while (j + 1 < ev.size() && is_app_event(ev[j + 1].key) &&
             ev[j + 1].timestamp_ms - ev[j].timestamp_ms <= kBurstWindowMs) {
        ++j;
        if (burst_priority(ev[j].key) > burst_priority(ev[best].key)) best = j;
      }
      emit({burst_name(ev[best]), EventKind::kUncontrollable, e.timestamp_ms,
            {i, j}});
      pending_click.reset();
      i = j + 1;
      continue;
    }

    switch (e.key) {
      case EventKey::kM: {
        Cell c = cell_of(e, 0);
        if (!last_mouse_cell || !(c == *last_mouse_cell)) {
          emit({"mouse to " + e.params[0] + "," + e.params[1],
                EventKind::kControllable, e.timestamp_ms, {i, i}});
          last_mouse_cell = c;
        }
        pending_click.reset();
        ++i;
        break;
      }
      case EventKey::kK3: {
        // Pair with an immediately following release of the same button.
        std::size_t release = i;
        if (i + 1 < ev.size() && ev[i + 1].key == EventKey::kK4 &&
            ev[i + 1].params[0] == e.params[0]) {
          release = i + 1;
        }
        Cell c = cell_of(e, 1);
        std::string button = e.params[0] == "2" ? "mouse rightclick" : "mouse click";
        if (pending_click && pending_click->cell == c &&
            pending_click->button == button &&
            e.timestamp_ms - pending_click->press_ts <= kDoubleClickWindowMs) {
          auto& prev = high.events[pending_click->out_index];
          prev.name = button == "mouse click" ? "mouse doubleclick"
                                              : "mouse rightdoubleclick";
          prev.source_span.second = release;
          pending_click.reset();
        } else {
          emit({button, EventKind::kControllable, e.timestamp_ms, {i, release}});
          pending_click = {high.events.size() - 1, c, e.timestamp_ms, button};
        }
        i = release + 1;
        break;
      }
      case EventKey::kK4:
        // Release without a matching press right before it: ignore.
        ++i;
        break;
      case EventKey::kK1: {
        emit({"key " + e.params[0], EventKind::kControllable, e.timestamp_ms,
              {i, i}});
        pending_click.reset();
        ++i;
        break;
      }
      case EventKey::kK2:
        // Releases are absorbed; the press carries the event.
        ++i;
        break;
      case EventKey::kK5: {
        emit({e.params[0] == "1" ? "mouse wheel up" : "mouse wheel down",
              EventKind::kControllable, e.timestamp_ms, {i, i}});
        pending_click.reset();
        ++i;
        break;
      }
      default:
        ++i;
        break;
    }
  }
  return high;
}

HighLevelLog translate_log(const LowLevelLog& low) {
  HighLevelLog high;
  high.traces.reserve(low.traces.size());
  for (const auto& t : low.traces) high.traces.push_back(translate_trace(t));
  return high;
}

std::vector<IntraTask> segment_intra_tasks(const HighLevelTrace& high) {
  std::vector<IntraTask> tasks;
  IntraTask current;
  for (const auto& e : high.events) {
    if (e.kind == EventKind::kControllable) {
      current.controllables.push_back(e);
    } else {
      current.terminator = e;
      current.synthetic_terminator = false;
      current.duration_ms =
          current.controllables.empty()
              ? 0
              : e.timestamp_ms - current.controllables.front().timestamp_ms;
      tasks.push_back(std::move(current));
      current = IntraTask{};
    }
  }
  if (!current.controllables.empty()) {
    std::int64_t last_ts = current.controllables.back().timestamp_ms;
    std::size_t last_span = current.controllables.back().source_span.second;
    current.terminator = {kTraceEndName, EventKind::kUncontrollable, last_ts,
                          {last_span, last_span}};
    current.synthetic_terminator = true;
    current.duration_ms =
        last_ts - current.controllables.front().timestamp_ms;
    tasks.push_back(std::move(current));
  }
  return tasks;
}

std::vector<std::string> inter_sequence(const HighLevelTrace& high) {
  std::vector<std::string> names;
  for (const auto& task : segment_intra_tasks(high)) {
    if (!task.synthetic_terminator) names.push_back(task.terminator.name);
  }
  return names;
}

}  // namespace behavemine
