#include "behavemine/key_codes.hpp"

#include <algorithm>
#include <cstdlib>

namespace behavemine {

KeyCodeTable::KeyCodeTable() {
  auto kb = [this](int code, std::string desc) {
    entries_.push_back({InputType::kKeyboard, code, std::move(desc)});
  };
  auto mouse = [this](int code, std::string desc) {
    entries_.push_back({InputType::kMouse, code, std::move(desc)});
  };

  kb(29, "Left ctrl");
  kb(3613, "Right ctrl");
  kb(3675, "Left meta");
  kb(28, "Enter");
  kb(3665, "Page down");
  kb(3657, "Page up");
  kb(1, "ESC");
  kb(56, "Left alt");
  kb(3640, "Right alt");
  mouse(1, "Left click");
  mouse(2, "Right click");
  kb(42, "Shift");
  kb(54, "Right shift");
  kb(57419, "Left arrow");
  kb(57416, "Top arrow");
  kb(57421, "Right arrow");
  kb(57424, "Down arrow");
  for (int i = 0; i < 10; ++i) kb(59 + i, "F" + std::to_string(i + 1));
  kb(87, "F11");
  kb(88, "F12");
  kb(15, "Tab");
  kb(14, "Backspace");
}

std::optional<std::string> KeyCodeTable::describe(InputType type, int code) const {
  for (const auto& e : entries_) {
    if (e.type == type && e.code == code) return e.description;
  }
  return std::nullopt;
}

bool KeyCodeTable::contains(InputType type, int code) const {
  return describe(type, code).has_value();
}

bool KeyCodeTable::valid_keyboard_code(const std::string& code) const {
  if (code == "TEXT" || code == "NUM") return true;
  char* end = nullptr;
  long v = std::strtol(code.c_str(), &end, 10);
  if (end == nullptr || *end != '\0' || code.empty()) return false;
  return contains(InputType::kKeyboard, static_cast<int>(v));
}

bool KeyCodeTable::valid_mouse_button(const std::string& code) const {
  return code == "1" || code == "2";
}

const KeyCodeTable& key_code_table() {
  static const KeyCodeTable table;
  return table;
}

}  // namespace behavemine
