#pragma once

// Line-oriented reports (`key: value` and `CHECK name PASS|FAIL detail`)
// with a JSON mirror.

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace artin {

inline constexpr const char* kReportSchema = "artin-report/1";

struct Check {
  std::string name;
  bool pass = true;
  std::string detail;

  std::string line() const { return "CHECK " + name + (pass ? " PASS " : " FAIL ") + detail; }
};

class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  void add(const std::string& key, const std::string& value) { entries_.push_back({key, value, std::nullopt}); }
  void add(const std::string& key, long long value) { add(key, std::to_string(value)); }
  void add(const Check& c) { entries_.push_back({"", "", c}); }
  void add_checks(const std::vector<Check>& cs) {
    for (const auto& c : cs) add(c);
  }

  bool all_checks_pass() const {
    for (const auto& e : entries_)
      if (e.check && !e.check->pass) return false;
    return true;
  }

  std::string text() const {
    std::string out;
    for (const auto& e : entries_) out += (e.check ? e.check->line() : e.key + ": " + e.value) + "\n";
    return out;
  }

  /// Same keys as text(); a key seen more than once becomes an array.
  nlohmann::ordered_json json() const {
    nlohmann::ordered_json j;
    j["schema"] = kReportSchema;
    j["command"] = command_;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& e : entries_) {
      if (e.check) {
        checks.push_back({{"name", e.check->name}, {"pass", e.check->pass}, {"detail", e.check->detail}});
        continue;
      }
      if (!j.contains(e.key)) {
        j[e.key] = e.value;
      } else {
        if (!j[e.key].is_array()) j[e.key] = nlohmann::ordered_json::array({j[e.key]});
        j[e.key].push_back(e.value);
      }
    }
    if (!checks.empty()) j["checks"] = checks;
    return j;
  }

  void write(std::ostream& os, bool as_json) const {
    if (as_json) {
      os << json().dump(2) << '\n';
    } else {
      os << text();
    }
  }

 private:
  struct Entry {
    std::string key;
    std::string value;
    std::optional<Check> check;
  };
  std::string command_;
  std::vector<Entry> entries_;
};

}  // namespace artin
