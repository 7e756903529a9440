#include "behavemine/event_model.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace behavemine {

namespace {

const std::pair<EventKey, const char*> kKeyNames[] = {
    {EventKey::kA1, "A1"}, {EventKey::kA2, "A2"}, {EventKey::kA3, "A3"},
    {EventKey::kA4, "A4"}, {EventKey::kA5, "A5"}, {EventKey::kA6, "A6"},
    {EventKey::kA7, "A7"}, {EventKey::kA8, "A8"}, {EventKey::kK1, "K1"},
    {EventKey::kK2, "K2"}, {EventKey::kK3, "K3"}, {EventKey::kK4, "K4"},
    {EventKey::kK5, "K5"}, {EventKey::kM, "M"},
};

bool parse_int(const std::string& s, std::int64_t& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool grid_coord_ok(const std::string& s) {
  std::int64_t v = 0;
  return parse_int(s, v) && v >= 1 && v <= 4;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      break;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out.push_back(sep);
    out += parts[i];
  }
  return out;
}

}  // namespace

const char* to_string(EventKey key) {
  for (const auto& [k, name] : kKeyNames) {
    if (k == key) return name;
  }
  return "?";
}

std::optional<EventKey> event_key_from_string(const std::string& s) {
  for (const auto& [k, name] : kKeyNames) {
    if (s == name) return k;
  }
  return std::nullopt;
}

bool is_app_event(EventKey key) {
  switch (key) {
    case EventKey::kA1: case EventKey::kA2: case EventKey::kA3:
    case EventKey::kA4: case EventKey::kA5: case EventKey::kA6:
    case EventKey::kA7: case EventKey::kA8:
      return true;
    default:
      return false;
  }
}

int param_arity(EventKey key) {
  switch (key) {
    case EventKey::kA1: return 7;
    case EventKey::kA2: return 3;
    case EventKey::kA3: return 2;
    case EventKey::kA4: return 2;
    case EventKey::kA5: return 3;
    case EventKey::kA6: return 6;
    case EventKey::kA7: return -1;
    case EventKey::kA8: return 3;
    case EventKey::kK1: return 1;
    case EventKey::kK2: return 1;
    case EventKey::kK3: return 3;
    case EventKey::kK4: return 3;
    case EventKey::kK5: return 1;
    case EventKey::kM: return 2;
  }
  return -1;
}

std::optional<std::string> check_event_schema(const LowLevelEvent& event) {
  int arity = param_arity(event.key);
  if (arity < 0) {
    if (event.params.empty())
      return std::string("A7 requires at least one PID#ProcessName entry");
    for (const auto& p : event.params) {
      if (p.find('#') == std::string::npos)
        return "A7 entry '" + p + "' is not of the form PID#ProcessName";
    }
    return std::nullopt;
  }
  if (static_cast<int>(event.params.size()) != arity) {
    return std::string(to_string(event.key)) + " expects " +
           std::to_string(arity) + " params, got " +
           std::to_string(event.params.size());
  }
  switch (event.key) {
    case EventKey::kM:
      if (!grid_coord_ok(event.params[0]) || !grid_coord_ok(event.params[1]))
        return std::string("M coordinates must be grid cells in 1..4");
      break;
    case EventKey::kK3:
    case EventKey::kK4:
      if (!key_code_table().valid_mouse_button(event.params[0]))
        return "unknown mouse button code '" + event.params[0] + "'";
      if (!grid_coord_ok(event.params[1]) || !grid_coord_ok(event.params[2]))
        return std::string("mouse click coordinates must be grid cells in 1..4");
      break;
    case EventKey::kK1:
    case EventKey::kK2:
      if (!key_code_table().valid_keyboard_code(event.params[0]))
        return "unknown key code '" + event.params[0] + "'";
      break;
    case EventKey::kK5:
      if (event.params[0] != "1" && event.params[0] != "-1")
        return std::string("K5 direction must be 1 or -1");
      break;
    default:
      break;
  }
  return std::nullopt;
}

ValidationResult validate_trace(const LowLevelTrace& trace) {
  ValidationResult result;
  std::int64_t prev = 0;
  for (std::size_t i = 0; i < trace.events.size(); ++i) {
    const auto& e = trace.events[i];
    if (i > 0 && e.timestamp_ms < prev) {
      result.violations.push_back(
          {i, "timestamp decreases (" + std::to_string(e.timestamp_ms) +
                  " after " + std::to_string(prev) + ")"});
    }
    prev = e.timestamp_ms;
    if (auto err = check_event_schema(e)) {
      result.violations.push_back({i, *err});
    }
  }
  return result;
}

ValidationResult validate_trace(const HighLevelTrace& trace) {
  ValidationResult result;
  std::int64_t prev = 0;
  std::size_t prev_span_end = 0;
  bool have_span = false;
  for (std::size_t i = 0; i < trace.events.size(); ++i) {
    const auto& e = trace.events[i];
    if (i > 0 && e.timestamp_ms < prev)
      result.violations.push_back({i, "timestamp decreases"});
    prev = e.timestamp_ms;
    if (e.name.empty()) result.violations.push_back({i, "empty event name"});
    if (e.source_span.second < e.source_span.first)
      result.violations.push_back({i, "span end precedes span start"});
    if (have_span && e.source_span.first <= prev_span_end)
      result.violations.push_back({i, "source spans overlap or are unordered"});
    prev_span_end = e.source_span.second;
    have_span = true;
  }
  return result;
}

namespace {
const char* kind_name(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::kMalformedLine: return "malformed line";
    case ParseErrorKind::kUnknownEventKey: return "unknown event key";
    case ParseErrorKind::kArityMismatch: return "arity mismatch";
    case ParseErrorKind::kNonMonotoneTimestamp: return "non-monotone timestamp";
    case ParseErrorKind::kDuplicateTraceId: return "duplicate trace id";
  }
  return "parse error";
}
}  // namespace

ParseError::ParseError(ParseErrorKind kind, std::size_t line_no,
                       const std::string& reason)
    : std::runtime_error("line " + std::to_string(line_no) + ": " +
                         kind_name(kind) + ": " + reason),
      kind_(kind),
      line_no_(line_no) {}

LowLevelLog parse_low_level_log(const std::string& text) {
  LowLevelLog log;
  std::map<std::string, std::size_t> index;  // trace id -> position in log
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;

    auto fields = split(line, ';');
    if (fields.size() != 4)
      throw ParseError(ParseErrorKind::kMalformedLine, line_no,
                       "expected 4 ';'-separated fields, got " +
                           std::to_string(fields.size()));
    const std::string& trace_id = fields[0];
    if (trace_id.empty())
      throw ParseError(ParseErrorKind::kMalformedLine, line_no, "empty trace id");

    LowLevelEvent event;
    if (!parse_int(fields[1], event.timestamp_ms))
      throw ParseError(ParseErrorKind::kMalformedLine, line_no,
                       "bad timestamp '" + fields[1] + "'");
    auto key = event_key_from_string(fields[2]);
    if (!key)
      throw ParseError(ParseErrorKind::kUnknownEventKey, line_no,
                       "'" + fields[2] + "'");
    event.key = *key;
    event.params = split(fields[3], ',');
    if (event.params.size() == 1 && event.params[0].empty()) event.params.clear();

    if (auto err = check_event_schema(event)) {
      int arity = param_arity(event.key);
      bool arity_problem =
          arity >= 0 && static_cast<int>(event.params.size()) != arity;
      throw ParseError(arity_problem ? ParseErrorKind::kArityMismatch
                                     : ParseErrorKind::kMalformedLine,
                       line_no, *err);
    }

    auto [it, inserted] = index.try_emplace(trace_id, log.traces.size());
    if (inserted) log.traces.push_back({trace_id, {}});
    auto& trace = log.traces[it->second];
    if (!trace.events.empty() &&
        event.timestamp_ms < trace.events.back().timestamp_ms) {
      throw ParseError(ParseErrorKind::kNonMonotoneTimestamp, line_no,
                       "timestamp " + std::to_string(event.timestamp_ms) +
                           " precedes " +
                           std::to_string(trace.events.back().timestamp_ms) +
                           " in trace '" + trace_id + "'");
    }
    trace.events.push_back(std::move(event));
  }
  return log;
}

std::string serialize_low_level_log(const LowLevelLog& log) {
  std::vector<const LowLevelTrace*> ordered;
  ordered.reserve(log.traces.size());
  for (const auto& t : log.traces) ordered.push_back(&t);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto* a, const auto* b) { return a->id < b->id; });
  std::string out;
  for (const auto* trace : ordered) {
    // Events are expected sorted already; a stable sort keeps ties intact.
    std::vector<const LowLevelEvent*> events;
    events.reserve(trace->events.size());
    for (const auto& e : trace->events) events.push_back(&e);
    std::stable_sort(events.begin(), events.end(), [](const auto* a, const auto* b) {
      return a->timestamp_ms < b->timestamp_ms;
    });
    for (const auto* e : events) {
      out += trace->id;
      out.push_back(';');
      out += std::to_string(e->timestamp_ms);
      out.push_back(';');
      out += to_string(e->key);
      out.push_back(';');
      out += join(e->params, ',');
      out.push_back('\n');
    }
  }
  return out;
}

HighLevelLog parse_high_level_log(const std::string& text) {
  HighLevelLog log;
  std::map<std::string, std::size_t> index;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;

    auto fields = split(line, ';');
    if (fields.size() != 5)
      throw ParseError(ParseErrorKind::kMalformedLine, line_no,
                       "expected 5 ';'-separated fields, got " +
                           std::to_string(fields.size()));
    HighLevelEvent event;
    if (!parse_int(fields[1], event.timestamp_ms))
      throw ParseError(ParseErrorKind::kMalformedLine, line_no,
                       "bad timestamp '" + fields[1] + "'");
    if (fields[2] == "C")
      event.kind = EventKind::kControllable;
    else if (fields[2] == "U")
      event.kind = EventKind::kUncontrollable;
    else
      throw ParseError(ParseErrorKind::kMalformedLine, line_no,
                       "kind must be C or U, got '" + fields[2] + "'");
    event.name = fields[3];
    if (event.name.empty())
      throw ParseError(ParseErrorKind::kMalformedLine, line_no, "empty name");
    auto span = split(fields[4], ',');
    std::int64_t lo = 0, hi = 0;
    if (span.size() != 2 || !parse_int(span[0], lo) || !parse_int(span[1], hi) ||
        lo < 0 || hi < lo)
      throw ParseError(ParseErrorKind::kMalformedLine, line_no,
                       "bad span '" + fields[4] + "'");
    event.source_span = {static_cast<std::size_t>(lo),
                         static_cast<std::size_t>(hi)};

    auto [it, inserted] = index.try_emplace(fields[0], log.traces.size());
    if (inserted) log.traces.push_back({fields[0], {}});
    auto& trace = log.traces[it->second];
    if (!trace.events.empty() &&
        event.timestamp_ms < trace.events.back().timestamp_ms)
      throw ParseError(ParseErrorKind::kNonMonotoneTimestamp, line_no,
                       "timestamps must be non-decreasing per trace");
    trace.events.push_back(std::move(event));
  }
  return log;
}

std::string serialize_high_level_log(const HighLevelLog& log) {
  std::vector<const HighLevelTrace*> ordered;
  ordered.reserve(log.traces.size());
  for (const auto& t : log.traces) ordered.push_back(&t);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto* a, const auto* b) { return a->id < b->id; });
  std::string out;
  for (const auto* trace : ordered) {
    for (const auto& e : trace->events) {
      out += trace->id;
      out.push_back(';');
      out += std::to_string(e.timestamp_ms);
      out.push_back(';');
      out += (e.kind == EventKind::kControllable ? "C" : "U");
      out.push_back(';');
      out += e.name;
      out.push_back(';');
      out += std::to_string(e.source_span.first);
      out.push_back(',');
      out += std::to_string(e.source_span.second);
      out.push_back('\n');
    }
  }
  return out;
}

}  // namespace behavemine
