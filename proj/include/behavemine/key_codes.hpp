#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace behavemine {

enum class InputType { kKeyboard, kMouse };

struct KeyCodeEntry {
  InputType type;
  int code;
  std::string description;
};

// Table of recorded key codes. Keyboard and mouse codes live in separate
// ranges conceptually but collide numerically (keyboard 1 = ESC, mouse
// 1 = left click), so lookups are qualified by input type.
class KeyCodeTable {
 public:
  KeyCodeTable();

  const std::vector<KeyCodeEntry>& entries() const { return entries_; }

  std::optional<std::string> describe(InputType type, int code) const;
  bool contains(InputType type, int code) const;

  // Valid K1/K2 payloads: a known keyboard code or the anonymized
  // placeholders "TEXT" / "NUM".
  bool valid_keyboard_code(const std::string& code) const;

  // Valid K3/K4 button codes (mouse 1/2).
  bool valid_mouse_button(const std::string& code) const;

 private:
  std::vector<KeyCodeEntry> entries_;
};

const KeyCodeTable& key_code_table();

}  // namespace behavemine
