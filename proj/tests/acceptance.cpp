// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Full-scale runs (825 traces per profile, fixed seed).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "behavemine/discovery.hpp"
#include "behavemine/recommender.hpp"
#include "behavemine/replay.hpp"
#include "behavemine/report.hpp"
#include "behavemine/rng.hpp"
#include "behavemine/simulator.hpp"
#include "behavemine/translator.hpp"

using namespace behavemine;

namespace {

constexpr std::uint64_t kSeed = 7;
constexpr int kTraces = 825;

int g_failures = 0;

void report(int criterion, const std::string& name, bool pass,
            const std::string& detail) {
  std::printf("[%s] criterion %d: %-28s %s\n", pass ? "PASS" : "FAIL",
              criterion, name.c_str(), detail.c_str());
  if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

// ---------------------------------------------------------------------------
// Criterion 1 helpers: random sound nets, random walks, chain-skip oracle.
// ---------------------------------------------------------------------------

struct GeneratedNet {
  PetriNet net;
  int label_counter = 0;
};

std::string next_label(GeneratedNet& g) {
  return "act" + std::to_string(g.label_counter++);
}

// Appends a random structured fragment between `entry` and a fresh exit
// place; returns the exit. Fragments: activity, XOR pair, AND block, loop.
std::size_t append_fragment(GeneratedNet& g, Rng& rng, std::size_t entry) {
  PetriNet& net = g.net;
  int kind = static_cast<int>(rng.uniform_int(0, 3));
  if (kind == 3 && net.place_count() + 5 > 12) kind = 0;  // AND needs room
  switch (kind) {
    case 0: {  // single activity
      std::size_t exit = net.add_place("p" + std::to_string(net.place_count()));
      std::size_t t = net.add_transition("t" + std::to_string(net.transition_count()),
                                         next_label(g), false);
      net.add_arc_pt(entry, t);
      net.add_arc_tp(t, exit);
      return exit;
    }
    case 1: {  // XOR choice
      std::size_t exit = net.add_place("p" + std::to_string(net.place_count()));
      for (int branch = 0; branch < 2; ++branch) {
        std::size_t t = net.add_transition(
            "t" + std::to_string(net.transition_count()), next_label(g), false);
        net.add_arc_pt(entry, t);
        net.add_arc_tp(t, exit);
      }
      return exit;
    }
    case 2: {  // activity with a visible loop back
      std::size_t exit = net.add_place("p" + std::to_string(net.place_count()));
      std::size_t t = net.add_transition("t" + std::to_string(net.transition_count()),
                                         next_label(g), false);
      net.add_arc_pt(entry, t);
      net.add_arc_tp(t, exit);
      std::size_t back = net.add_transition(
          "t" + std::to_string(net.transition_count()), next_label(g), false);
      net.add_arc_pt(exit, back);
      net.add_arc_tp(back, entry);
      return exit;
    }
    default: {  // AND block
      std::size_t split = net.add_transition(
          "t" + std::to_string(net.transition_count()), next_label(g), false);
      net.add_arc_pt(entry, split);
      std::size_t j1 = net.add_place("p" + std::to_string(net.place_count()));
      std::size_t j2 = net.add_place("p" + std::to_string(net.place_count()));
      std::size_t exit = net.add_place("p" + std::to_string(net.place_count()));
      std::size_t join = net.add_transition(
          "t" + std::to_string(net.transition_count()), next_label(g), false);
      for (std::size_t branch_entry : {j1, j2}) {
        net.add_arc_tp(split, branch_entry);
        std::size_t mid = net.add_place("p" + std::to_string(net.place_count()));
        std::size_t t = net.add_transition(
            "t" + std::to_string(net.transition_count()), next_label(g), false);
        net.add_arc_pt(branch_entry, t);
        net.add_arc_tp(t, mid);
        net.add_arc_pt(mid, join);
      }
      net.add_arc_tp(join, exit);
      return exit;
    }
  }
}

GeneratedNet random_sound_net(Rng& rng) {
  GeneratedNet g;
  std::size_t entry = g.net.add_place("p0");
  g.net.initial_marking()[entry] = 1;
  std::size_t cursor = entry;
  int fragments = static_cast<int>(rng.uniform_int(2, 4));
  for (int i = 0; i < fragments && g.net.place_count() < 11; ++i)
    cursor = append_fragment(g, rng, cursor);
  g.net.final_marking()[cursor] = 1;
  return g;
}

HighLevelTrace random_walk(const PetriNet& net, Rng& rng) {
  HighLevelTrace trace;
  trace.id = "walk";
  Marking m = net.initial_marking();
  std::int64_t ts = 0;
  std::size_t idx = 0;
  for (int step = 0; step < 60; ++step) {
    if (m == net.final_marking() && rng.bernoulli(0.5)) break;
    std::vector<std::size_t> options;
    for (std::size_t t = 0; t < net.transition_count(); ++t)
      if (enabled(net, m, t)) options.push_back(t);
    if (options.empty()) break;
    std::size_t t = options[static_cast<std::size_t>(
        rng.uniform_int(0, static_cast<std::int64_t>(options.size()) - 1))];
    m = fire(net, m, t);
    trace.events.push_back({*net.transition(t).label, EventKind::kControllable,
                            ts, {idx, idx}});
    ts += 100;
    ++idx;
  }
  return trace;
}

PetriNet chain_net(const std::vector<std::string>& labels) {
  PetriNet pn;
  std::size_t prev = pn.add_place("p0");
  pn.initial_marking()[prev] = 1;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    std::size_t t = pn.add_transition("t" + std::to_string(i), labels[i], false);
    pn.add_arc_pt(prev, t);
    std::size_t next = pn.add_place("p" + std::to_string(i + 1));
    pn.add_arc_tp(t, next);
    prev = next;
  }
  pn.final_marking()[prev] = 1;
  return pn;
}

// Brute-force oracle: minimal total visible model moves over
// (event index, marking) states.
std::int64_t oracle_min_cost(const PetriNet& pn, const HighLevelTrace& trace) {
  struct State {
    std::size_t index;
    Marking marking;
    bool operator<(const State& o) const {
      if (index != o.index) return index < o.index;
      return marking < o.marking;
    }
  };
  std::map<State, std::int64_t> best;
  State start{0, pn.initial_marking()};
  best[start] = 0;
  std::multimap<std::int64_t, State> queue{{0, start}};
  while (!queue.empty()) {
    auto [cost, state] = *queue.begin();
    queue.erase(queue.begin());
    if (best.count(state) && best[state] < cost) continue;
    if (state.index == trace.events.size()) return cost;
    auto target = pn.transition_by_label(trace.events[state.index].name);
    auto relax = [&](const State& next, std::int64_t c) {
      auto it = best.find(next);
      if (it == best.end() || c < it->second) {
        best[next] = c;
        queue.insert({c, next});
      }
    };
    if (!target) {
      relax({state.index + 1, state.marking}, cost + 1);
      continue;
    }
    if (enabled(pn, state.marking, *target))
      relax({state.index + 1, fire(pn, state.marking, *target)}, cost);
    for (std::size_t t = 0; t < pn.transition_count(); ++t) {
      if (!enabled(pn, state.marking, t)) continue;
      relax({state.index, fire(pn, state.marking, t)},
            cost + (pn.transition(t).invisible ? 0 : 1));
    }
  }
  return -1;
}

void criterion_1() {
  auto start = std::chrono::steady_clock::now();
  Rng rng(1234);
  int bad_walks = 0, checked_nets = 0;
  for (int n = 0; n < 200; ++n) {
    auto generated = random_sound_net(rng);
    if (is_sound(generated.net).verdict != Soundness::kSound) continue;
    ++checked_nets;
    for (int w = 0; w < 50; ++w) {
      auto trace = random_walk(generated.net, rng);
      auto result = replay_trace(generated.net, trace);
      if (result.cost != 0 || result.fitness != 1.0) ++bad_walks;
    }
  }
  int bad_chains = 0;
  for (int round = 0; round < 60; ++round) {
    int len = static_cast<int>(rng.uniform_int(5, 12));
    std::vector<std::string> labels;
    for (int i = 0; i < len; ++i) labels.push_back("c" + std::to_string(i));
    auto pn = chain_net(labels);
    int k = static_cast<int>(rng.uniform_int(1, 4));
    std::set<std::size_t> dropped;
    while (static_cast<int>(dropped.size()) < k)
      dropped.insert(static_cast<std::size_t>(rng.uniform_int(0, len - 1)));
    HighLevelTrace trace;
    trace.id = "chain";
    std::int64_t ts = 0;
    std::size_t idx = 0;
    for (int i = 0; i < len; ++i) {
      if (dropped.count(static_cast<std::size_t>(i))) continue;
      trace.events.push_back({labels[static_cast<std::size_t>(i)],
                              EventKind::kControllable, ts, {idx, idx}});
      ts += 100;
      ++idx;
    }
    auto result = replay_trace(pn, trace);
    if (result.cost != k || oracle_min_cost(pn, trace) != result.cost)
      ++bad_chains;
  }
  double elapsed = seconds_since(start);
  char detail[160];
  std::snprintf(detail, sizeof(detail),
                "(%d sound nets, bad walks %d, bad chains %d, %.1fs)",
                checked_nets, bad_walks, bad_chains, elapsed);
  report(1, "replay oracle equivalence",
         checked_nets >= 190 && bad_walks == 0 && bad_chains == 0 &&
             elapsed < 30.0,
         detail);
}

// ---------------------------------------------------------------------------
// Pipeline-based criteria.
// ---------------------------------------------------------------------------

struct ProfileRun {
  PipelineResult result;
  double seconds = 0.0;
  double mean_events = 0.0;
};

ProfileRun run_profile(Profile profile) {
  ProfileRun run;
  auto start = std::chrono::steady_clock::now();
  PipelineConfig config;
  config.profile = profile;
  config.trace_count = kTraces;
  config.seed = kSeed;
  run.result = run_pipeline(config);
  run.seconds = seconds_since(start);
  std::size_t events = 0;
  for (const auto& t : run.result.user_high.traces) events += t.events.size();
  run.mean_events = static_cast<double>(events) /
                    static_cast<double>(run.result.user_high.traces.size());
  return run;
}

bool has_hotkey_intra(const std::vector<Recommendation>& recs) {
  for (const auto& rec : recs) {
    if (rec.kind != Recommendation::Kind::kIntra) continue;
    bool has56 = false, has15 = false;
    for (const auto& name : rec.intra.do_instead) {
      if (name == "key 56") has56 = true;
      if (name == "key 15") has15 = true;
    }
    if (has56 && has15) return true;
  }
  return false;
}

bool has_inter(const std::vector<Recommendation>& recs) {
  for (const auto& rec : recs)
    if (rec.kind == Recommendation::Kind::kInter) return true;
  return false;
}

}  // namespace

int main() {
  criterion_1();

  std::map<Profile, ProfileRun> runs;
  for (auto profile : {Profile::kUser1, Profile::kUser2, Profile::kUser3,
                       Profile::kUser4, Profile::kUser5}) {
    runs[profile] = run_profile(profile);
  }

  // Criterion 2: fitness bands and orderings, runtime per profile.
  {
    bool pass = true;
    std::ostringstream detail;
    detail.setf(std::ios::fixed);
    detail.precision(3);
    for (auto& [profile, run] : runs) {
      const auto& m = run.result.metrics;
      bool band = m.user_fitness >= 0.6 && m.user_fitness <= 0.95;
      bool order = m.optimal_fitness < m.user_fitness;
      bool gap = profile == Profile::kUser1 ||
                 (m.user_fitness - m.optimal_fitness >= 0.05);
      bool timed = run.seconds < 60.0;
      if (!(band && order && gap && timed)) pass = false;
      detail << to_string(profile) << " " << m.user_fitness << "/"
             << m.optimal_fitness << " ";
    }
    report(2, "fitness ordering", pass, "(" + detail.str() + ")");
  }

  // Criterion 3: reactivity recovery.
  {
    HighLevelLog optimal_log;
    optimal_log.traces.push_back(runs[Profile::kUser2].result.optimal_high);
    double optimal_reactivity = measure_reactivity(optimal_log);
    double user2_reactivity = runs[Profile::kUser2].result.metrics.reactivity_ms;
    double u2_target = reactivity_median_ms(preset(Profile::kUser2).reactivity);
    bool pass = std::abs(optimal_reactivity - 328.0) <= 0.15 * 328.0 &&
                std::abs(user2_reactivity - u2_target) <= 0.15 * u2_target;
    char detail[120];
    std::snprintf(detail, sizeof(detail), "(optimal %.0fms vs 328, user2 %.0fms vs %.0f)",
                  optimal_reactivity, user2_reactivity, u2_target);
    report(3, "reactivity recovery", pass, detail);
  }

  // Criterion 4: mouse precision.
  {
    LowLevelLog optimal_low = runs[Profile::kUser2].result.optimal_low;
    double optimal_precision = measure_mouse_precision(optimal_low);
    bool pass = std::abs(optimal_precision - 1.0) <= 0.02;
    std::ostringstream detail;
    detail.setf(std::ios::fixed);
    detail.precision(3);
    detail << "(optimal " << optimal_precision;
    for (auto profile : {Profile::kUser2, Profile::kUser3, Profile::kUser4,
                         Profile::kUser5}) {
      double p = runs[profile].result.metrics.mouse_precision;
      if (std::abs(p - 1.0) > 0.02) pass = false;
      detail << " " << to_string(profile) << " " << p;
    }
    double u1 = runs[Profile::kUser1].result.metrics.mouse_precision;
    if (!(u1 < 0.5)) pass = false;
    detail << " user1 " << u1 << ")";
    report(4, "mouse precision", pass, detail.str());
  }

  // Criterion 5: recommendation presence pattern.
  {
    bool u1_zero = runs[Profile::kUser1].result.recommendations.empty();
    bool u2_hot = has_hotkey_intra(runs[Profile::kUser2].result.recommendations);
    bool u4_hot = has_hotkey_intra(runs[Profile::kUser4].result.recommendations);
    bool u5_hot = has_hotkey_intra(runs[Profile::kUser5].result.recommendations);
    bool u3_rep = has_inter(runs[Profile::kUser3].result.recommendations);
    bool u4_rep = has_inter(runs[Profile::kUser4].result.recommendations);
    bool u5_rep = has_inter(runs[Profile::kUser5].result.recommendations);
    bool pass = u1_zero && u2_hot && u4_hot && u5_hot && u3_rep && u4_rep && u5_rep;
    char detail[160];
    std::snprintf(detail, sizeof(detail),
                  "(user1 empty %d; hotkeys u2 %d u4 %d u5 %d; repetition u3 %d "
                  "u4 %d u5 %d)",
                  u1_zero, u2_hot, u4_hot, u5_hot, u3_rep, u4_rep, u5_rep);
    report(5, "recommendation pattern", pass, detail);
  }

  // Criterion 6: saving formula fixture (6 avoided, 2 replacement, 901 ms).
  {
    HighLevelLog user;
    std::vector<std::string> avoid = {"mouse to 4,3", "mouse to 3,3",
                                      "mouse to 2,3", "mouse to 1,3",
                                      "mouse to 1,2", "mouse click"};
    for (int i = 0; i < 10; ++i) {
      HighLevelTrace t;
      t.id = "u" + std::to_string(i);
      std::int64_t ts = 0;
      std::size_t idx = 0;
      for (const auto& name : avoid) {
        t.events.push_back({name, EventKind::kControllable, ts, {idx, idx}});
        ts += 100;
        ++idx;
      }
      t.events.push_back(
          {"explorer maximize", EventKind::kUncontrollable, ts, {idx, idx}});
      user.traces.push_back(std::move(t));
    }
    HighLevelTrace optimal{"opt",
                           {{"key 56", EventKind::kControllable, 0, {0, 0}},
                            {"key 15", EventKind::kControllable, 100, {1, 1}},
                            {"explorer maximize", EventKind::kUncontrollable,
                             600, {2, 2}}}};
    auto recs = intra_recommendations(user, optimal, 901.0);
    bool pass = recs.size() == 1 && recs[0].avg_time_saving_ms == 3604.0;
    char detail[80];
    std::snprintf(detail, sizeof(detail), "(saving %.0f, expected 3604)",
                  recs.empty() ? -1.0 : recs[0].avg_time_saving_ms);
    report(6, "saving formula", pass, detail);
  }

  // Criterion 7: soundness and label totality for every discovered net.
  {
    bool pass = true;
    std::ostringstream detail;
    for (auto& [profile, run] : runs) {
      auto verdict = is_sound(run.result.net);
      if (verdict.verdict != Soundness::kSound) {
        pass = false;
        detail << to_string(profile) << ":" << verdict.reason << " ";
      }
      std::set<std::string> names;
      for (const auto& t : run.result.user_high.traces)
        for (const auto& e : t.events) names.insert(e.name);
      for (const auto& name : names) {
        int count = 0;
        for (std::size_t t = 0; t < run.result.net.transition_count(); ++t) {
          const auto& def = run.result.net.transition(t);
          if (!def.invisible && def.label == name) ++count;
        }
        if (count != 1) {
          pass = false;
          detail << to_string(profile) << ":label '" << name << "' x" << count
                 << " ";
        }
      }
    }
    report(7, "discovery soundness", pass,
           pass ? "(all profiles sound, labels total)" : "(" + detail.str() + ")");
  }

  // Criterion 8: whole-pipeline determinism.
  {
    PipelineConfig config;
    config.profile = Profile::kUser2;
    config.trace_count = kTraces;
    config.seed = kSeed;
    auto again = run_pipeline(config);
    bool pass =
        render_report(again, "text") ==
            render_report(runs[Profile::kUser2].result, "text") &&
        render_report(again, "json") ==
            render_report(runs[Profile::kUser2].result, "json") &&
        serialize_low_level_log(again.user_low) ==
            serialize_low_level_log(runs[Profile::kUser2].result.user_low);
    report(8, "determinism", pass,
           pass ? "(byte-identical reports and logs)" : "(mismatch)");
  }

  // Criterion 9: statistical calibration.
  {
    const auto& optimal_low = runs[Profile::kUser2].result.optimal_low;
    const auto& optimal_high = runs[Profile::kUser2].result.optimal_high;
    std::size_t optimal_events = optimal_high.events.size();
    std::int64_t duration = optimal_low.traces[0].events.back().timestamp_ms;
    bool optimal_ok = optimal_events >= 120 && optimal_events <= 180 &&
                      duration >= 50000 && duration <= 85000;
    double u1 = runs[Profile::kUser1].mean_events;
    double u2 = runs[Profile::kUser2].mean_events;
    double u3 = runs[Profile::kUser3].mean_events;
    double u4 = runs[Profile::kUser4].mean_events;
    double u5 = runs[Profile::kUser5].mean_events;
    bool order = u3 < u2 && u2 < u4 && u4 < u1 && u1 < u5;
    char detail[200];
    std::snprintf(detail, sizeof(detail),
                  "(optimal %zu events %.1fs; means u3 %.1f < u2 %.1f < u4 %.1f "
                  "< u1 %.1f < u5 %.1f)",
                  optimal_events, static_cast<double>(duration) / 1000.0, u3, u2,
                  u4, u1, u5);
    report(9, "statistical calibration", optimal_ok && order, detail);
  }

  if (g_failures == 0) {
    std::printf("all acceptance criteria passed\n");
  } else {
    std::printf("%d criteria FAILED\n", g_failures);
  }
  return g_failures == 0 ? 0 : 1;
}
