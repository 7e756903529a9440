#include <doctest.h>

#include <set>

#include "behavemine/simulator.hpp"
#include "behavemine/translator.hpp"

using namespace behavemine;

namespace {

LowLevelTrace make_trace(std::vector<LowLevelEvent> events) {
  return {"t", std::move(events)};
}

}  // namespace

TEST_CASE("A-burst collapses to one uncontrollable with priority naming") {
  // App switch: A3 + A6 + A7 within the burst window.
  auto high = translate_trace(make_trace({
      {0, EventKey::kA3, {"7", "explorer"}},
      {40, EventKey::kA6, {"7", "explorer", "1920", "1080", "0", "0"}},
      {90, EventKey::kA7, {"7#explorer", "9#notepad"}},
  }));
  REQUIRE(high.events.size() == 1);
  CHECK(high.events[0].name == "explorer maximize");
  CHECK(high.events[0].kind == EventKind::kUncontrollable);
  CHECK(high.events[0].timestamp_ms == 0);
  CHECK(high.events[0].source_span == std::make_pair<std::size_t, std::size_t>(0, 2));
}

TEST_CASE("burst priority: close outranks open, path outranks maximize") {
  auto high = translate_trace(make_trace({
      {0, EventKey::kA1, {"3", "notepad", "x - Notepad", "1", "1", "0", "0"}},
      {50, EventKey::kA2, {"3", "notepad", "x - Notepad"}},
  }));
  REQUIRE(high.events.size() == 1);
  CHECK(high.events[0].name == "notepad close");

  auto high2 = translate_trace(make_trace({
      {0, EventKey::kA3, {"7", "explorer"}},
      {50, EventKey::kA8, {"7", "documents", "documents/company data"}},
  }));
  REQUIRE(high2.events.size() == 1);
  CHECK(high2.events[0].name == "explorer path to documents/company data");
}

TEST_CASE("A-events beyond the gap window form separate bursts") {
  auto high = translate_trace(make_trace({
      {0, EventKey::kA3, {"7", "explorer"}},
      {500, EventKey::kA4, {"7", "explorer"}},
  }));
  REQUIRE(high.events.size() == 2);
  CHECK(high.events[0].name == "explorer maximize");
  CHECK(high.events[1].name == "explorer minimize");
}

TEST_CASE("click pair maps to mouse click, two fast pairs to doubleclick") {
  auto one = translate_trace(make_trace({
      {0, EventKey::kK3, {"1", "2", "3"}},
      {60, EventKey::kK4, {"1", "2", "3"}},
  }));
  REQUIRE(one.events.size() == 1);
  CHECK(one.events[0].name == "mouse click");

  auto two = translate_trace(make_trace({
      {0, EventKey::kK3, {"1", "2", "3"}},
      {60, EventKey::kK4, {"1", "2", "3"}},
      {200, EventKey::kK3, {"1", "2", "3"}},
      {260, EventKey::kK4, {"1", "2", "3"}},
  }));
  REQUIRE(two.events.size() == 1);
  CHECK(two.events[0].name == "mouse doubleclick");
  CHECK(two.events[0].source_span == std::make_pair<std::size_t, std::size_t>(0, 3));
}

TEST_CASE("slow or different-cell click pairs stay separate") {
  auto slow = translate_trace(make_trace({
      {0, EventKey::kK3, {"1", "2", "3"}},
      {60, EventKey::kK4, {"1", "2", "3"}},
      {900, EventKey::kK3, {"1", "2", "3"}},
      {960, EventKey::kK4, {"1", "2", "3"}},
  }));
  CHECK(slow.events.size() == 2);

  auto moved = translate_trace(make_trace({
      {0, EventKey::kK3, {"1", "2", "3"}},
      {60, EventKey::kK4, {"1", "2", "3"}},
      {200, EventKey::kK3, {"1", "4", "4"}},
      {260, EventKey::kK4, {"1", "4", "4"}},
  }));
  CHECK(moved.events.size() == 2);
}

TEST_CASE("key press/release pairs give one event at press time") {
  // alt+tab chord, nested releases
  auto high = translate_trace(make_trace({
      {0, EventKey::kK1, {"56"}},
      {300, EventKey::kK1, {"15"}},
      {360, EventKey::kK2, {"15"}},
      {420, EventKey::kK2, {"56"}},
  }));
  REQUIRE(high.events.size() == 2);
  CHECK(high.events[0].name == "key 56");
  CHECK(high.events[0].timestamp_ms == 0);
  CHECK(high.events[1].name == "key 15");
  CHECK(high.events[1].timestamp_ms == 300);
}

TEST_CASE("mouse movement: one event per cell change, duplicates dropped") {
  auto high = translate_trace(make_trace({
      {0, EventKey::kM, {"4", "3"}},
      {100, EventKey::kM, {"3", "3"}},
      {200, EventKey::kM, {"3", "3"}},  // same cell, dropped
      {300, EventKey::kM, {"2", "3"}},
  }));
  REQUIRE(high.events.size() == 3);
  CHECK(high.events[0].name == "mouse to 4,3");
  CHECK(high.events[1].name == "mouse to 3,3");
  CHECK(high.events[2].name == "mouse to 2,3");
}

TEST_CASE("orphan A-event: unresolvable process name") {
  CHECK_THROWS_AS(
      translate_trace(make_trace({{0, EventKey::kA7, {"7#"}}})),
      TranslationError);
}

TEST_CASE("translation preserves timestamps and monotonicity") {
  auto params = preset(Profile::kUser2);
  params.trace_count = 4;
  params.seed = 12;
  auto low = simulate_log(params, "user2");
  for (const auto& trace : low.traces) {
    auto high = translate_trace(trace);
    CHECK(validate_trace(high).ok());
    for (const auto& e : high.events) {
      CHECK(e.timestamp_ms == trace.events[e.source_span.first].timestamp_ms);
    }
  }
}

TEST_CASE("segment_intra_tasks on the unrolled definition") {
  HighLevelTrace trace{"t",
                       {{"c1", EventKind::kControllable, 0, {0, 0}},
                        {"c2", EventKind::kControllable, 10, {1, 1}},
                        {"u1", EventKind::kUncontrollable, 20, {2, 2}},
                        {"c3", EventKind::kControllable, 30, {3, 3}},
                        {"u2", EventKind::kUncontrollable, 40, {4, 4}}}};
  auto tasks = segment_intra_tasks(trace);
  REQUIRE(tasks.size() == 2);
  CHECK(tasks[0].controllables.size() == 2);
  CHECK(tasks[0].terminator.name == "u1");
  CHECK(tasks[0].duration_ms == 20);
  CHECK(tasks[1].controllables.size() == 1);
  CHECK(tasks[1].terminator.name == "u2");
}

TEST_CASE("segment_intra_tasks: degenerate and trailing cases") {
  HighLevelTrace only_u{"t", {{"u", EventKind::kUncontrollable, 5, {0, 0}}}};
  auto tasks = segment_intra_tasks(only_u);
  REQUIRE(tasks.size() == 1);
  CHECK(tasks[0].controllables.empty());
  CHECK(!tasks[0].synthetic_terminator);

  HighLevelTrace trailing{"t",
                          {{"u", EventKind::kUncontrollable, 5, {0, 0}},
                           {"c", EventKind::kControllable, 9, {1, 1}}}};
  auto tasks2 = segment_intra_tasks(trailing);
  REQUIRE(tasks2.size() == 2);
  CHECK(tasks2[1].synthetic_terminator);
  CHECK(tasks2[1].terminator.name == kTraceEndName);
}

TEST_CASE("segmentation partitions every simulated trace") {
  auto params = preset(Profile::kOptimal);
  params.trace_count = 1;
  params.seed = 5;
  auto low = simulate_log(params, "optimal");
  auto high = translate_trace(low.traces[0]);
  auto tasks = segment_intra_tasks(high);
  // Coverage oracle: every event in exactly one task.
  std::size_t covered = 0;
  for (const auto& task : tasks)
    covered += task.controllables.size() + (task.synthetic_terminator ? 0 : 1);
  CHECK(covered == high.events.size());
}

TEST_CASE("inter_sequence lists terminators, excluding trace end") {
  HighLevelTrace trace{"t",
                       {{"c", EventKind::kControllable, 0, {0, 0}},
                        {"explorer open", EventKind::kUncontrollable, 10, {1, 1}},
                        {"c", EventKind::kControllable, 20, {2, 2}},
                        {"c", EventKind::kControllable, 30, {3, 3}},
                        {"notepad close", EventKind::kUncontrollable, 40, {4, 4}},
                        {"c", EventKind::kControllable, 50, {5, 5}}}};
  auto names = inter_sequence(trace);
  CHECK(names == std::vector<std::string>{"explorer open", "notepad close"});

  HighLevelTrace empty{"t", {}};
  CHECK(inter_sequence(empty).empty());
}

TEST_CASE("repetition-heavy profile yields duplicated terminators") {
  auto params = preset(Profile::kUser3);
  params.trace_count = 30;
  params.seed = 3;
  auto low = simulate_log(params, "user3");
  bool found_consecutive_dup = false;
  for (const auto& trace : low.traces) {
    auto names = inter_sequence(translate_trace(trace));
    for (std::size_t i = 1; i < names.size(); ++i) {
      if (names[i] == "notepad open" && i >= 1 && names[i - 1] == "notepad close")
        found_consecutive_dup = true;
    }
  }
  CHECK(found_consecutive_dup);
}
