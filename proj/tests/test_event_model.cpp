#include <doctest.h>

#include "behavemine/event_model.hpp"
#include "behavemine/rng.hpp"
#include "behavemine/simulator.hpp"

using namespace behavemine;

TEST_CASE("parse minimal well-formed log") {
  auto log = parse_low_level_log("t1;0;M;2,3\nt1;105;K3;1,2,3\n");
  REQUIRE(log.traces.size() == 1);
  const auto& t = log.traces[0];
  CHECK(t.id == "t1");
  REQUIRE(t.events.size() == 2);
  CHECK(t.events[0].key == EventKey::kM);
  CHECK(t.events[0].timestamp_ms == 0);
  CHECK(t.events[1].key == EventKey::kK3);
  CHECK(t.events[1].params == std::vector<std::string>{"1", "2", "3"});
}

TEST_CASE("comments and blank lines are skipped") {
  auto log = parse_low_level_log("# header\n\nt1;0;K1;28\n");
  REQUIRE(log.traces.size() == 1);
  CHECK(log.traces[0].events.size() == 1);
}

TEST_CASE("arity mismatch is reported with the line number") {
  try {
    parse_low_level_log("t1;0;K1;28\nt1;50;A8;pid1,docs\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseErrorKind::kArityMismatch);
    CHECK(e.line_no() == 2);
  }
}

TEST_CASE("unknown event key") {
  CHECK_THROWS_AS(parse_low_level_log("t1;0;Q9;1\n"), ParseError);
  try {
    parse_low_level_log("t1;0;Q9;1\n");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseErrorKind::kUnknownEventKey);
  }
}

TEST_CASE("non-monotone timestamps rejected at parse time") {
  try {
    parse_low_level_log("t1;10;K1;28\nt1;5;K1;28\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseErrorKind::kNonMonotoneTimestamp);
  }
}

TEST_CASE("grid bounds and key codes are validated") {
  CHECK_THROWS_AS(parse_low_level_log("t1;0;M;0,3\n"), ParseError);
  CHECK_THROWS_AS(parse_low_level_log("t1;0;M;5,1\n"), ParseError);
  CHECK_THROWS_AS(parse_low_level_log("t1;0;K1;12345\n"), ParseError);
  CHECK_NOTHROW(parse_low_level_log("t1;0;K1;TEXT\n"));
  CHECK_NOTHROW(parse_low_level_log("t1;0;K1;NUM\n"));
  CHECK_NOTHROW(parse_low_level_log("t1;0;K1;3675\n"));
  CHECK_NOTHROW(parse_low_level_log("t1;0;A7;10#notepad,11#explorer\n"));
  CHECK_THROWS_AS(parse_low_level_log("t1;0;A7;notepad\n"), ParseError);
}

TEST_CASE("serialize: empty and single-event logs") {
  CHECK(serialize_low_level_log({}) == "");
  LowLevelLog log;
  log.traces.push_back({"t1", {{0, EventKey::kK1, {"28"}}}});
  CHECK(serialize_low_level_log(log) == "t1;0;K1;28\n");
}

TEST_CASE("serialization is a canonical fixed point") {
  // Unordered trace ids in the file; canonical output sorts them.
  std::string f =
      "# log\n"
      "t2;0;K1;28\n"
      "t1;0;M;1,1\n"
      "t2;40;K2;28\n"
      "t1;55;M;2,2\n";
  auto once = serialize_low_level_log(parse_low_level_log(f));
  auto twice = serialize_low_level_log(parse_low_level_log(once));
  CHECK(once == twice);
  CHECK(once.find("t1;0;M;1,1") < once.find("t2;0;K1;28"));
}

TEST_CASE("round-trip: parse(serialize(L)) == L for a simulated log") {
  auto params = preset(Profile::kUser3);
  params.trace_count = 3;
  params.seed = 99;
  auto log = simulate_log(params, "user3");
  auto text = serialize_low_level_log(log);
  auto back = parse_low_level_log(text);
  // Canonical order may differ from generation order only in trace order;
  // ids here are already lexicographic.
  REQUIRE(back.traces.size() == log.traces.size());
  for (std::size_t i = 0; i < back.traces.size(); ++i) {
    CHECK(back.traces[i].id == log.traces[i].id);
    CHECK(back.traces[i].events == log.traces[i].events);
  }
}

TEST_CASE("validate_trace flags ordering violations as data") {
  LowLevelTrace ok{"t", {{0, EventKey::kK1, {"28"}},
                         {5, EventKey::kK2, {"28"}},
                         {5, EventKey::kK1, {"15"}},
                         {9, EventKey::kK2, {"15"}}}};
  CHECK(validate_trace(ok).ok());  // ties allowed

  LowLevelTrace bad{"t", {{0, EventKey::kK1, {"28"}},
                          {9, EventKey::kK2, {"28"}},
                          {5, EventKey::kK1, {"15"}}}};
  auto result = validate_trace(bad);
  REQUIRE(result.violations.size() == 1);
  CHECK(result.violations[0].event_index == 2);

  LowLevelTrace empty{"t", {}};
  CHECK(validate_trace(empty).ok());
}

TEST_CASE("key code table holds the recorded keys") {
  const auto& table = key_code_table();
  CHECK(table.describe(InputType::kKeyboard, 28) == "Enter");
  CHECK(table.describe(InputType::kKeyboard, 56) == "Left alt");
  CHECK(table.describe(InputType::kKeyboard, 15) == "Tab");
  CHECK(table.describe(InputType::kKeyboard, 14) == "Backspace");
  CHECK(table.describe(InputType::kMouse, 1) == "Left click");
  CHECK(table.describe(InputType::kMouse, 2) == "Right click");
  CHECK(table.describe(InputType::kKeyboard, 1) == "ESC");
  CHECK(table.describe(InputType::kKeyboard, 62) == "F4");
  CHECK(table.describe(InputType::kKeyboard, 88) == "F12");
  CHECK(table.describe(InputType::kKeyboard, 3675) == "Left meta");
  CHECK(!table.contains(InputType::kKeyboard, 12345));
  // 17 single keyboard codes + 12 function keys + 2 mouse buttons
  CHECK(table.entries().size() == 31);
}

TEST_CASE("high-level log round-trip") {
  HighLevelLog log;
  log.traces.push_back(
      {"t1",
       {{"key 28", EventKind::kControllable, 0, {0, 0}},
        {"mouse to 4,3", EventKind::kControllable, 100, {1, 1}},
        {"explorer maximize", EventKind::kUncontrollable, 600, {2, 4}}}});
  auto text = serialize_high_level_log(log);
  CHECK(text ==
        "t1;0;C;key 28;0,0\n"
        "t1;100;C;mouse to 4,3;1,1\n"
        "t1;600;U;explorer maximize;2,4\n");
  auto back = parse_high_level_log(text);
  REQUIRE(back.traces.size() == 1);
  CHECK(back.traces[0].events == log.traces[0].events);
}
