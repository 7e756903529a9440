#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "behavemine/key_codes.hpp"

namespace behavemine {

// ---------------------------------------------------------------------------
// Low-level events
// ---------------------------------------------------------------------------

enum class EventKey {
  kA1, kA2, kA3, kA4, kA5, kA6, kA7, kA8,
  kK1, kK2, kK3, kK4, kK5,
  kM,
};

const char* to_string(EventKey key);
std::optional<EventKey> event_key_from_string(const std::string& s);
bool is_app_event(EventKey key);  // A1..A8

// Expected parameter count for an event key; A7 carries a variable-length
// window hierarchy (one "PID#ProcessName" entry per param), signalled by -1.
int param_arity(EventKey key);

struct LowLevelEvent {
  std::int64_t timestamp_ms = 0;
  EventKey key = EventKey::kM;
  std::vector<std::string> params;

  bool operator==(const LowLevelEvent&) const = default;
};

// ---------------------------------------------------------------------------
// High-level events
// ---------------------------------------------------------------------------

enum class EventKind { kControllable, kUncontrollable };

struct HighLevelEvent {
  std::string name;
  EventKind kind = EventKind::kControllable;
  std::int64_t timestamp_ms = 0;
  // Inclusive index range into the originating low-level trace.
  std::pair<std::size_t, std::size_t> source_span{0, 0};

  bool operator==(const HighLevelEvent&) const = default;
};

// ---------------------------------------------------------------------------
// Traces and logs
// ---------------------------------------------------------------------------

template <typename E>
struct Trace {
  std::string id;
  std::vector<E> events;

  bool operator==(const Trace&) const = default;
};

template <typename E>
struct EventLog {
  std::vector<Trace<E>> traces;

  bool operator==(const EventLog&) const = default;
};

using LowLevelTrace = Trace<LowLevelEvent>;
using HighLevelTrace = Trace<HighLevelEvent>;
using LowLevelLog = EventLog<LowLevelEvent>;
using HighLevelLog = EventLog<HighLevelEvent>;

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

struct InvariantViolation {
  std::size_t event_index = 0;
  std::string message;
};

struct ValidationResult {
  std::vector<InvariantViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks the ordering invariant plus per-event schema rules (arity, grid
// bounds, known key codes). Violations are data, not errors.
ValidationResult validate_trace(const LowLevelTrace& trace);
ValidationResult validate_trace(const HighLevelTrace& trace);

// Schema check for a single low-level event. Returns an error message, or
// nullopt when the event is well formed.
std::optional<std::string> check_event_schema(const LowLevelEvent& event);

// ---------------------------------------------------------------------------
// File I/O
// ---------------------------------------------------------------------------

enum class ParseErrorKind {
  kMalformedLine,
  kUnknownEventKey,
  kArityMismatch,
  kNonMonotoneTimestamp,
  kDuplicateTraceId,
};

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line_no, const std::string& reason);

  ParseErrorKind kind() const { return kind_; }
  std::size_t line_no() const { return line_no_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_no_;
};

// Line format: trace_id;timestamp_ms;EVENT_KEY;param1,param2,...
// '#'-prefixed lines and blank lines are ignored. Traces are grouped by the
// id column; events must appear in non-decreasing timestamp order per trace.
LowLevelLog parse_low_level_log(const std::string& text);
std::string serialize_low_level_log(const LowLevelLog& log);

// Line format: trace_id;timestamp_ms;kind;name;span_start,span_end with
// kind C (controllable) or U (uncontrollable).
HighLevelLog parse_high_level_log(const std::string& text);
std::string serialize_high_level_log(const HighLevelLog& log);

}  // namespace behavemine
