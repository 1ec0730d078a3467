#pragma once

#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <string_view>

#include "outrank/error.hpp"

namespace outrank {

// Flat `key = value` settings. Blank lines and lines starting with '#' are
// skipped; a later duplicate key overrides an earlier one.
class KeyValueConfig {
 public:
  static KeyValueConfig parse(std::string_view text) {
    KeyValueConfig cfg;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      const auto s = trim(line);
      if (s.empty() || s.front() == '#') continue;
      const auto eq = s.find('=');
      if (eq == std::string_view::npos) {
        throw Error(ErrorKind::Configuration,
                    "config line " + std::to_string(line_no) + ": expected key = value");
      }
      const auto key = trim(s.substr(0, eq));
      if (key.empty()) {
        throw Error(ErrorKind::Configuration,
                    "config line " + std::to_string(line_no) + ": empty key");
      }
      cfg.entries_[std::string(key)] = std::string(trim(s.substr(eq + 1)));
    }
    return cfg;
  }

  const std::map<std::string, std::string>& entries() const noexcept { return entries_; }

  bool contains(const std::string& key) const { return entries_.count(key) != 0; }

  const std::string* find(const std::string& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
  }

  double get_real(const std::string& key, double fallback) const {
    const auto* v = find(key);
    if (!v) return fallback;
    std::size_t used = 0;
    double out = 0;
    try {
      out = std::stod(*v, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != v->size()) {
      throw Error(ErrorKind::Configuration, "config key '" + key + "': not a number");
    }
    return out;
  }

 private:
  static std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  }

  std::map<std::string, std::string> entries_;
};

}  // namespace outrank
