#include "behavemine/simulator.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdio>

namespace behavemine {

namespace {

constexpr double kBaseReactivityMs = 328.0;
constexpr double kReactivitySpanMs = 900.0;
constexpr double kDelaySigma = 0.25;

// Fixed content templates: the task data is the same in every trace, so the
// typed character classes (T = text key, N = numeric key) are deterministic.
// Only typos vary, gated by key_precision.
constexpr const char* kSummaryTemplate =
    "TTTTTTTTTTNNNNNNTTTTTTTTTNNNNNNTTTTTTTNNNNNNTTTTTTTTTTNNNNNNTTTTTTTTNNNNNN";
constexpr const char* kAppendTemplate = "TTTTTTTTNNNNNNTTNNNNNN";
constexpr int kValueDigits = 6;
constexpr int kCompanyFolderChars = 12;  // "company data"
constexpr int kSummariesFolderChars = 9; // "summaries"
constexpr int kFileNameChars = 7;        // "summary"

constexpr int kExplorerPid = 1904;
constexpr int kCalculatorPid = 6100;
constexpr int kNotepadPidBase = 4200;

struct Cell {
  int x = 0, y = 0;
  bool operator==(const Cell&) const = default;
};

// Serpentine tour of the 4x4 grid; imprecise mouse runs follow it.
constexpr std::array<Cell, 16> kSweep = {{{1, 1}, {2, 1}, {3, 1}, {4, 1},
                                          {4, 2}, {3, 2}, {2, 2}, {1, 2},
                                          {1, 3}, {2, 3}, {3, 3}, {4, 3},
                                          {4, 4}, {3, 4}, {2, 4}, {1, 4}}};

std::size_t sweep_index(Cell c) {
  for (std::size_t i = 0; i < kSweep.size(); ++i)
    if (kSweep[i] == c) return i;
  return 0;
}

// Fidget vocabulary: arrows and paging keys; esc joins for the varied tail.
constexpr std::array<int, 6> kFidgetVocab = {57424, 57416, 3665,
                                             3657, 57419, 57421};
constexpr std::array<int, 7> kFidgetTailVocab = {57424, 57416, 3665, 3657,
                                                 57419, 57421, 1};
// Stray keys a fast-but-sloppy typist brushes: anything the logger records.
constexpr std::array<int, 24> kStrayKeyVocab = {
    29,    3613,  3675,  28, 3665, 3657, 1,  56, 3640, 42, 54, 57419,
    57416, 57421, 57424, 59, 60,   61,   62, 87, 88,   15, 63, 64};

// Define straight approach runs for every mouse act (absolute grid cells).
const std::vector<Cell> kRunExplorerIcon = {{3, 3}, {4, 4}};
const std::vector<Cell> kRunMaximize = {{3, 2}, {2, 2}, {1, 2}};
const std::vector<Cell> kRunCompanyFolder = {{2, 3}, {2, 2}};
const std::vector<Cell> kRunSearchBox = {{3, 1}, {2, 1}};
const std::vector<Cell> kRunFile1 = {{1, 3}, {1, 4}};
const std::vector<Cell> kRunFile2 = {{2, 3}, {2, 4}};
const std::vector<Cell> kRunSummariesFolder = {{3, 2}, {3, 3}};
const std::vector<Cell> kRunSummaryFile = {{1, 2}, {1, 3}};
const std::vector<Cell> kRunTaskbarExplorer = {{3, 4}, {2, 4}};
const std::vector<Cell> kRunTaskbarCalc = {{3, 4}, {4, 4}};
const std::vector<Cell> kRunTaskbarNotepad = {{3, 3}, {3, 4}};
const std::vector<Cell> kRunMinButton = {{2, 1}, {3, 1}};
const std::vector<Cell> kRunCloseButton = {{3, 1}, {4, 1}};

const std::string kPathDocuments = "documents";
const std::string kPathCompany = "documents/company data";
const std::string kPathSummaries = "documents/company data/summaries";

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

struct WindowInfo {
  int pid = 0;
  std::string name;
  std::string title;
};

class TraceBuilder {
 public:
  TraceBuilder(const SimulationParams& params, Rng rng)
      : p_(params), rng_(std::move(rng)) {
    delay_median_ = reactivity_median_ms(p_.reactivity);
    p_fidget_ = std::min(0.95, (1.0 - p_.reactivity) * 2.08);
    p_tail_ = 0.85;
    p_wander_ = clamp01((0.95 - p_.mouse_precision) / 0.90) * 0.97;
    p_typo_ = clamp01((0.95 - p_.key_precision) / 0.90) * 0.42;
  }

  std::vector<LowLevelEvent> run_trace() {
    bool rep_hit = rng_.bernoulli(p_.repetition);
    int rep_target = rep_hit ? static_cast<int>(rng_.pick_weighted(
                                   {0.43, 0.22, 0.35}))
                             : -1;  // 0 notepad, 1 calc, 2 nav
    std::vector<std::size_t> order = rng_.bernoulli(p_.sequential)
                                         ? canonical_order()
                                         : random_topo_order();
    for (std::size_t idx : order) {
      run_subtask(idx);
      if (idx == 2 && rep_target == 2) redo_nav();
      if (idx == 6 && rep_target == 1) redo_calc();
      if (idx == 9 && rep_target == 0) redo_notepad();
    }
    return std::move(events_);
  }

  // For realize_subtask: run a state-establishing prefix, then capture.
  std::vector<LowLevelEvent> run_single(std::size_t subtask) {
    for (std::size_t i = 0; i < subtask; ++i) run_subtask(i);
    std::size_t mark = events_.size();
    run_subtask(subtask);
    return {events_.begin() + static_cast<std::ptrdiff_t>(mark), events_.end()};
  }

 private:
  // ---- emission primitives -------------------------------------------------

  void emit(EventKey key, std::vector<std::string> params) {
    events_.push_back({clock_, key, std::move(params)});
  }

  void delay_reactive() {
    // Key-release events sit between consecutive presses, so the think-time
    // median is shifted down by the typical release gap to keep measured
    // press-to-press deltas on the configured line.
    double median = std::max(80.0, delay_median_ - 60.0);
    double d = rng_.lognormal_median(median, kDelaySigma);
    clock_ += std::max<std::int64_t>(30, std::llround(d));
  }

  void delay(double lo, double hi) {
    clock_ += std::llround(rng_.uniform(lo, hi));
  }

  void key_press(const std::string& code) {
    delay_reactive();
    emit(EventKey::kK1, {code});
  }

  void key_release(const std::string& code, double lo, double hi) {
    delay(lo, hi);
    emit(EventKey::kK2, {code});
  }

  void key_tap(int code) { key_tap(std::to_string(code)); }

  void key_tap(const std::string& code) {
    key_press(code);
    key_release(code, 38, 82);
  }

  void chord(int a, const std::string& b) {
    std::string sa = std::to_string(a);
    key_press(sa);
    key_press(b);
    key_release(b, 30, 70);
    key_release(sa, 25, 60);
  }

  void chord(int a, int b) { chord(a, std::to_string(b)); }

  void typed_char(char cls) {
    while (rng_.bernoulli(p_typo_)) {
      key_tap(rng_.bernoulli(0.25) ? "NUM" : "TEXT");
      if (rng_.bernoulli(0.45)) {
        // flailing for the backspace brushes a random key pair
        key_tap(kStrayKeyVocab[static_cast<std::size_t>(rng_.uniform_int(
            0, static_cast<std::int64_t>(kStrayKeyVocab.size()) - 1))]);
        key_tap(kStrayKeyVocab[static_cast<std::size_t>(rng_.uniform_int(
            0, static_cast<std::int64_t>(kStrayKeyVocab.size()) - 1))]);
      }
      key_tap(14);
      if (!rng_.bernoulli(0.15)) break;
    }
    key_tap(cls == 'N' ? "NUM" : "TEXT");
  }

  void type_template(const char* tmpl) {
    for (const char* c = tmpl; *c; ++c) typed_char(*c);
  }

  void type_text(int n) {
    for (int i = 0; i < n; ++i) typed_char('T');
  }

  void type_digits(int n) {
    for (int i = 0; i < n; ++i) typed_char('N');
  }

  void mouse_to(Cell c) {
    if (c == mouse_) return;
    delay_reactive();
    emit(EventKey::kM, {std::to_string(c.x), std::to_string(c.y)});
    mouse_ = c;
  }

  std::vector<Cell> wander_cells(Cell from, Cell to) {
    // Two sweep stretches with random entry offsets; the (offset, length)
    // combination diversifies the produced cell strings so no single
    // wander variant can outweigh the precise path.
    std::vector<Cell> cells{from};
    std::size_t pos = sweep_index(from);
    for (int stretch = 0; stretch < 2; ++stretch) {
      pos = (pos + static_cast<std::size_t>(rng_.uniform_int(1, 4))) %
            kSweep.size();
      cells.push_back(kSweep[pos]);
      std::int64_t steps = rng_.uniform_int(6, 14);
      for (std::int64_t i = 0; i < steps; ++i) {
        pos = (pos + 1) % kSweep.size();
        cells.push_back(kSweep[pos]);
      }
    }
    Cell cur = cells.back();
    while (!(cur == to)) {
      if (cur.x < to.x) ++cur.x;
      else if (cur.x > to.x) --cur.x;
      if (cur.y < to.y) ++cur.y;
      else if (cur.y > to.y) --cur.y;
      cells.push_back(cur);
    }
    return cells;
  }

  void mouse_run(const std::vector<Cell>& path) {
    std::vector<Cell> cells = rng_.bernoulli(p_wander_)
                                  ? wander_cells(path.front(), path.back())
                                  : path;
    for (const auto& c : cells) mouse_to(c);
  }

  void click(int button = 1) {
    delay_reactive();
    std::string x = std::to_string(mouse_.x), y = std::to_string(mouse_.y);
    std::string b = std::to_string(button);
    emit(EventKey::kK3, {b, x, y});
    delay(42, 78);
    emit(EventKey::kK4, {b, x, y});
  }

  void doubleclick() {
    delay_reactive();
    std::string x = std::to_string(mouse_.x), y = std::to_string(mouse_.y);
    emit(EventKey::kK3, {"1", x, y});
    delay(42, 78);
    emit(EventKey::kK4, {"1", x, y});
    delay(95, 140);
    emit(EventKey::kK3, {"1", x, y});
    delay(42, 78);
    emit(EventKey::kK4, {"1", x, y});
  }

  // ---- system responses ----------------------------------------------------

  struct AEvent {
    EventKey key;
    std::vector<std::string> params;
  };

  void burst(std::vector<AEvent> group) {
    delay(350, 650);
    bool first = true;
    for (auto& e : group) {
      if (!first) delay(20, 100);
      first = false;
      emit(e.key, std::move(e.params));
    }
  }

  std::vector<std::string> hierarchy() const {
    std::vector<std::string> entries;
    for (const auto& w : z_order_)
      entries.push_back(std::to_string(w.pid) + "#" + w.name);
    return entries;
  }

  AEvent a7() { return {EventKey::kA7, hierarchy()}; }

  WindowInfo* find_window(int pid) {
    for (auto& w : z_order_)
      if (w.pid == pid) return &w;
    return nullptr;
  }

  void raise_window(int pid) {
    for (std::size_t i = 0; i < z_order_.size(); ++i) {
      if (z_order_[i].pid == pid) {
        WindowInfo w = z_order_[i];
        z_order_.erase(z_order_.begin() + static_cast<std::ptrdiff_t>(i));
        z_order_.insert(z_order_.begin(), w);
        return;
      }
    }
  }

  void open_window(WindowInfo w) { z_order_.insert(z_order_.begin(), w); }

  void close_window(int pid) {
    z_order_.erase(std::remove_if(z_order_.begin(), z_order_.end(),
                                  [&](const WindowInfo& w) { return w.pid == pid; }),
                   z_order_.end());
  }

  int focused_pid() const { return z_order_.empty() ? 0 : z_order_.front().pid; }

  bool hot() { return rng_.bernoulli(p_.hotkey_usage); }

  void fidget(std::size_t site) {
    if (!rng_.bernoulli(p_fidget_)) return;
    int stem_a = kFidgetVocab[(2 * site) % kFidgetVocab.size()];
    int stem_b = kFidgetVocab[(2 * site + 3) % kFidgetVocab.size()];
    key_tap(stem_a);
    key_tap(stem_b);
    if (rng_.bernoulli(p_tail_)) {
      // drifts off over a random key pair, then settles through the same
      // stem before acting
      for (int i = 0; i < 2; ++i)
        key_tap(kFidgetTailVocab[static_cast<std::size_t>(rng_.uniform_int(
            0, static_cast<std::int64_t>(kFidgetTailVocab.size()) - 1))]);
      key_tap(stem_a);
      key_tap(stem_b);
    }
  }

  void switch_to(int pid, const std::vector<Cell>& taskbar_run) {
    if (focused_pid() == pid) return;
    if (hot()) {
      chord(56, 15);
    } else {
      mouse_run(taskbar_run);
      click();
    }
    raise_window(pid);
    burst({a7()});
  }

  void ensure_explorer_focus() { switch_to(kExplorerPid, kRunTaskbarExplorer); }

  void close_act(int pid) {
    if (hot()) {
      chord(56, 62);  // alt + F4
    } else {
      mouse_run(kRunCloseButton);
      click();
    }
    WindowInfo* w = find_window(pid);
    std::vector<std::string> a2_params = {
        std::to_string(pid), w ? w->name : "unknown", w ? w->title : ""};
    close_window(pid);
    std::vector<AEvent> group{{EventKey::kA2, a2_params}};
    if (!z_order_.empty()) group.push_back(a7());
    burst(std::move(group));
  }

  void nav_to(const std::string& to, const std::vector<Cell>& folder_run,
              int typed_chars) {
    if (rng_.bernoulli(p_.search)) {
      mouse_run(kRunSearchBox);
      click();
      type_text(typed_chars);
      key_tap(28);
    } else {
      mouse_run(folder_run);
      doubleclick();
    }
    burst({{EventKey::kA8, {std::to_string(kExplorerPid), explorer_path_, to}},
           {EventKey::kA5, {std::to_string(kExplorerPid), "explorer", to}}});
    explorer_path_ = to;
  }

  void open_notepad(const std::string& file, const std::vector<Cell>& icon_run) {
    mouse_run(icon_run);
    doubleclick();
    int pid = kNotepadPidBase + (++notepad_count_);
    std::string title = file + " - Notepad";
    open_window({pid, "notepad", title});
    burst({{EventKey::kA1,
            {std::to_string(pid), "notepad", title, "920", "640", "140", "90"}},
           {EventKey::kA5, {std::to_string(pid), "notepad", title}},
           a7()});
    delay(2600, 4400);  // reading
  }

  void open_calculator() {
    if (hot()) {
      key_tap(3675);
      type_text(1);
      key_tap(28);
    } else {
      mouse_run(kRunTaskbarCalc);
      click();
    }
    open_window({kCalculatorPid, "calculator", "Calculator"});
    calc_open_ = true;
    burst({{EventKey::kA1,
            {std::to_string(kCalculatorPid), "calculator", "Calculator", "340",
             "480", "60", "60"}},
           a7()});
  }

  // ---- subtasks ------------------------------------------------------------

  static std::vector<std::size_t> canonical_order() {
    return {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
  }

  std::vector<std::size_t> random_topo_order() {
    const auto& scenario = summary_scenario();
    std::vector<std::size_t> order;
    std::vector<bool> done(scenario.subtasks.size(), false);
    while (order.size() < scenario.subtasks.size()) {
      std::vector<std::size_t> ready;
      for (std::size_t i = 0; i < scenario.subtasks.size(); ++i) {
        if (done[i]) continue;
        bool ok = true;
        for (std::size_t d : scenario.subtasks[i].deps)
          if (!done[d]) ok = false;
        if (ok) ready.push_back(i);
      }
      std::size_t pick = static_cast<std::size_t>(
          rng_.uniform_int(0, static_cast<std::int64_t>(ready.size()) - 1));
      done[ready[pick]] = true;
      order.push_back(ready[pick]);
    }
    return order;
  }

  void run_subtask(std::size_t idx) {
    switch (idx) {
      case 0: st_open_explorer(); break;
      case 1: st_maximize_explorer(); break;
      case 2: st_nav_company(); break;
      case 3: st_open_file(kRunFile1, "product_a.txt"); break;
      case 4: st_open_calculator(); break;
      case 5: st_enter_value1(); break;
      case 6: st_back_to_explorer(); break;
      case 7: st_open_file(kRunFile2, "product_b.txt"); break;
      case 8: st_enter_value2(); break;
      case 9: st_write_summary(); break;
      case 10: st_close_calculator(); break;
      case 11: st_close_explorer(); break;
      default: throw SimulatorError("unknown subtask index");
    }
  }

  void st_open_explorer() {
    fidget(0);
    if (hot()) {
      chord(3675, "TEXT");  // win + e
    } else {
      mouse_run(kRunExplorerIcon);
      doubleclick();
    }
    open_window({kExplorerPid, "explorer", "Documents"});
    explorer_path_ = kPathDocuments;
    burst({{EventKey::kA1,
            {std::to_string(kExplorerPid), "explorer", "Documents", "1280",
             "800", "0", "0"}},
           a7()});
  }

  void st_maximize_explorer() {
    fidget(1);
    ensure_explorer_focus();
    if (hot()) {
      chord(56, 15);
    } else {
      mouse_run(kRunMaximize);
      click();
    }
    burst({{EventKey::kA3, {std::to_string(kExplorerPid), "explorer"}},
           {EventKey::kA6,
            {std::to_string(kExplorerPid), "explorer", "1920", "1080", "0", "0"}},
           a7()});
  }

  void st_nav_company() {
    fidget(2);
    ensure_explorer_focus();
    nav_to(kPathCompany, kRunCompanyFolder, kCompanyFolderChars);
  }

  void st_open_file(const std::vector<Cell>& icon_run, const std::string& file) {
    fidget(icon_run == kRunFile1 ? 3 : 7);
    ensure_explorer_focus();
    open_notepad(file, icon_run);
  }

  void st_open_calculator() {
    fidget(4);
    open_calculator();
  }

  void st_enter_value1() {
    if (focused_pid() != kCalculatorPid) switch_to(kCalculatorPid, kRunTaskbarCalc);
    type_digits(kValueDigits);
    key_tap("NUM");  // '+'
    if (rng_.bernoulli(p_.app_closing)) {
      close_act(kCalculatorPid);
      calc_open_ = false;
    }
  }

  void st_back_to_explorer() {
    fidget(6);
    if (focused_pid() == kCalculatorPid && rng_.bernoulli(p_.minimize)) {
      mouse_run(kRunMinButton);
      click();
      raise_window(kExplorerPid);
      burst({{EventKey::kA4, {std::to_string(kCalculatorPid), "calculator"}},
             a7()});
    } else {
      ensure_explorer_focus();
    }
  }

  void st_enter_value2() {
    fidget(8);
    if (!calc_open_) {
      open_calculator();
    } else if (focused_pid() != kCalculatorPid) {
      switch_to(kCalculatorPid, kRunTaskbarCalc);
    }
    type_digits(kValueDigits);
    key_tap("NUM");  // '='
    delay(1100, 1900);
  }

  void st_write_summary() {
    fidget(9);
    ensure_explorer_focus();
    nav_to(kPathSummaries, kRunSummariesFolder, kSummariesFolderChars);
    if (rng_.bernoulli(p_.app_open_or_reopen)) {
      key_tap(3675);
      type_text(7);  // "notepad"
      key_tap(28);
      int pid = kNotepadPidBase + (++notepad_count_);
      open_window({pid, "notepad", "Untitled - Notepad"});
      burst({{EventKey::kA1,
              {std::to_string(pid), "notepad", "Untitled - Notepad", "920",
               "640", "140", "90"}},
             a7()});
    } else {
      int pid = top_notepad_pid();
      if (pid == 0) {
        pid = kNotepadPidBase + (++notepad_count_);
        open_window({pid, "notepad", "Untitled - Notepad"});
        burst({{EventKey::kA1,
                {std::to_string(pid), "notepad", "Untitled - Notepad", "920",
                 "640", "140", "90"}},
               a7()});
      } else {
        switch_to(pid, kRunTaskbarNotepad);
      }
    }
    int pid = focused_pid();
    type_template(kSummaryTemplate);
    chord(29, "TEXT");  // ctrl + s
    type_text(kFileNameChars);
    key_tap(28);
    if (WindowInfo* w = find_window(pid)) w->title = "summary.txt - Notepad";
    burst({{EventKey::kA5, {std::to_string(pid), "notepad", "summary.txt - Notepad"}}});
    close_act(pid);
  }

  void st_close_calculator() {
    fidget(10);
    if (!calc_open_) return;
    if (focused_pid() != kCalculatorPid) switch_to(kCalculatorPid, kRunTaskbarCalc);
    close_act(kCalculatorPid);
    calc_open_ = false;
  }

  void st_close_explorer() {
    fidget(11);
    ensure_explorer_focus();
    close_act(kExplorerPid);
  }

  int top_notepad_pid() const {
    for (const auto& w : z_order_)
      if (w.name == "notepad") return w.pid;
    return 0;
  }

  // ---- repetition redos ----------------------------------------------------

  void redo_nav() {
    fidget(12);
    key_tap(14);  // backspace: explorer up
    burst({{EventKey::kA8,
            {std::to_string(kExplorerPid), explorer_path_, kPathDocuments}},
           {EventKey::kA5, {std::to_string(kExplorerPid), "explorer",
                            kPathDocuments}}});
    explorer_path_ = kPathDocuments;
    nav_to(kPathCompany, kRunCompanyFolder, kCompanyFolderChars);
  }

  void redo_calc() {
    if (!calc_open_) return;
    fidget(13);
    switch_to(kCalculatorPid, kRunTaskbarCalc);
    mouse_run(kRunMinButton);
    click();
    raise_window(kExplorerPid);
    burst({{EventKey::kA4, {std::to_string(kCalculatorPid), "calculator"}},
           a7()});
  }

  void redo_notepad() {
    fidget(14);
    ensure_explorer_focus();
    mouse_run(kRunSummaryFile);
    doubleclick();
    int pid = kNotepadPidBase + (++notepad_count_);
    open_window({pid, "notepad", "summary.txt - Notepad"});
    burst({{EventKey::kA1,
            {std::to_string(pid), "notepad", "summary.txt - Notepad", "920",
             "640", "140", "90"}},
           {EventKey::kA5, {std::to_string(pid), "notepad", "summary.txt - Notepad"}},
           a7()});
    type_template(kAppendTemplate);
    chord(29, "TEXT");  // ctrl + s
    burst({{EventKey::kA5, {std::to_string(pid), "notepad", "summary.txt - Notepad"}}});
    close_act(pid);
  }

  const SimulationParams& p_;
  Rng rng_;
  std::vector<LowLevelEvent> events_;
  std::int64_t clock_ = 0;
  Cell mouse_{2, 2};
  std::vector<WindowInfo> z_order_;
  std::string explorer_path_ = kPathDocuments;
  bool calc_open_ = false;
  int notepad_count_ = 0;

  double delay_median_ = kBaseReactivityMs;
  double p_fidget_ = 0.0;
  double p_tail_ = 0.0;
  double p_wander_ = 0.0;
  double p_typo_ = 0.0;
};

}  // namespace

void SimulationParams::validate() const {
  auto check = [](double v, const char* name) {
    if (v < 0.0 || v > 1.0)
      throw SimulatorError(std::string(name) + " must be in [0,1]");
  };
  check(reactivity, "reactivity");
  check(mouse_precision, "mouse_precision");
  check(minimize, "minimize");
  check(app_closing, "app_closing");
  check(app_open_or_reopen, "app_open_or_reopen");
  check(search, "search");
  check(hotkey_usage, "hotkey_usage");
  check(repetition, "repetition");
  check(sequential, "sequential");
  check(key_precision, "key_precision");
  if (trace_count < 0) throw SimulatorError("trace_count must be non-negative");
}

double reactivity_median_ms(double reactivity) {
  return kBaseReactivityMs + (1.0 - reactivity) * kReactivitySpanMs;
}

std::optional<Profile> profile_from_string(const std::string& name) {
  std::string lower;
  for (char c : name) lower.push_back(static_cast<char>(std::tolower(c)));
  if (lower == "optimal") return Profile::kOptimal;
  if (lower == "user1") return Profile::kUser1;
  if (lower == "user2") return Profile::kUser2;
  if (lower == "user3") return Profile::kUser3;
  if (lower == "user4") return Profile::kUser4;
  if (lower == "user5") return Profile::kUser5;
  return std::nullopt;
}

const char* to_string(Profile profile) {
  switch (profile) {
    case Profile::kOptimal: return "optimal";
    case Profile::kUser1: return "user1";
    case Profile::kUser2: return "user2";
    case Profile::kUser3: return "user3";
    case Profile::kUser4: return "user4";
    case Profile::kUser5: return "user5";
  }
  return "?";
}

SimulationParams preset(Profile profile) {
  SimulationParams p;
  // Targets from the study write-up: optimal reactivity 328 ms; user
  // reactivities 674 / 901 / 922 / 731 / 337 ms via the delay-median line.
  switch (profile) {
    case Profile::kOptimal:
      p.reactivity = 1.0;
      p.mouse_precision = 1.0;
      p.key_precision = 1.0;
      p.minimize = 0.0;
      p.app_closing = 0.0;
      p.app_open_or_reopen = 0.0;
      p.search = 0.0;
      p.hotkey_usage = 1.0;
      p.repetition = 0.0;
      p.sequential = 1.0;
      break;
    case Profile::kUser1:  // lower reactivity, low mouse precision
      p.reactivity = 0.6156;
      p.mouse_precision = 0.05;
      p.key_precision = 0.95;
      p.minimize = 0.05;
      p.app_closing = 0.05;
      p.app_open_or_reopen = 0.05;
      p.search = 0.05;
      p.hotkey_usage = 0.95;
      p.repetition = 0.05;
      p.sequential = 0.95;
      break;
    case Profile::kUser2:  // very low reactivity, no hotkey usage
      p.reactivity = 0.3633;
      p.mouse_precision = 0.95;
      p.key_precision = 0.95;
      p.minimize = 0.05;
      p.app_closing = 0.05;
      p.app_open_or_reopen = 0.05;
      p.search = 0.95;
      p.hotkey_usage = 0.05;
      p.repetition = 0.05;
      p.sequential = 0.95;
      break;
    case Profile::kUser3:  // very low reactivity, repetitions
      p.reactivity = 0.34;
      p.mouse_precision = 0.95;
      p.key_precision = 0.95;
      p.minimize = 0.05;
      p.app_closing = 0.05;
      p.app_open_or_reopen = 0.05;
      p.search = 0.05;
      p.hotkey_usage = 0.95;
      p.repetition = 0.95;
      p.sequential = 0.95;
      break;
    case Profile::kUser4:  // low reactivity, repetitions, no hotkeys
      p.reactivity = 0.5522;
      p.mouse_precision = 0.95;
      p.key_precision = 0.95;
      p.minimize = 0.05;
      p.app_closing = 0.05;
      p.app_open_or_reopen = 0.05;
      p.search = 0.95;
      p.hotkey_usage = 0.05;
      p.repetition = 0.95;
      p.sequential = 0.95;
      break;
    case Profile::kUser5:  // high reactivity, low key precision, repetitions, no hotkeys
      p.reactivity = 0.99;
      p.mouse_precision = 0.95;
      p.key_precision = 0.05;
      p.minimize = 0.05;
      p.app_closing = 0.05;
      p.app_open_or_reopen = 0.05;
      p.search = 0.95;
      p.hotkey_usage = 0.05;
      p.repetition = 0.95;
      p.sequential = 0.95;
      break;
  }
  return p;
}

const ScenarioModel& summary_scenario() {
  static const ScenarioModel model = [] {
    ScenarioModel m;
    m.subtasks = {
        {"open explorer", "hotkey_usage", {}, "explorer open"},
        {"maximize explorer", "hotkey_usage", {0}, "explorer maximize"},
        {"navigate to company data", "search", {1}, "explorer path to " + kPathCompany},
        {"open first data file", "", {2}, "notepad open"},
        {"open calculator", "hotkey_usage", {}, "calculator open"},
        {"enter first value", "app_closing", {3, 4}, ""},
        {"return to explorer", "minimize", {5}, "explorer focus"},
        {"open second data file", "", {6, 2}, "notepad open"},
        {"enter second value", "", {7, 5}, "calculator focus"},
        {"write summary file", "search", {8}, "notepad close"},
        {"close calculator", "hotkey_usage", {9}, "calculator close"},
        {"close explorer", "hotkey_usage", {9}, "explorer close"},
    };
    return m;
  }();
  return model;
}

LowLevelLog simulate_log(const SimulationParams& params,
                         const std::string& trace_label) {
  params.validate();
  LowLevelLog log;
  log.traces.reserve(static_cast<std::size_t>(params.trace_count));
  for (int i = 0; i < params.trace_count; ++i) {
    TraceBuilder builder(params, Rng::derive(params.seed, static_cast<std::uint64_t>(i)));
    char id[64];
    std::snprintf(id, sizeof(id), "u%s-%04d", trace_label.c_str(), i + 1);
    log.traces.push_back({id, builder.run_trace()});
  }
  return log;
}

std::vector<LowLevelEvent> realize_subtask(std::size_t subtask_index,
                                           const SimulationParams& params,
                                           Rng& rng) {
  params.validate();
  if (subtask_index >= summary_scenario().subtasks.size())
    throw SimulatorError("unknown subtask index");
  TraceBuilder builder(params, Rng::derive(rng.next_u64(), 0));
  return builder.run_single(subtask_index);
}

}  // namespace behavemine
