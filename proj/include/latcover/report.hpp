#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace latcover {

/// One named pass/fail verdict with a human-readable explanation.
struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Ordered list of checks; passes iff every check passes.
struct Report {
  std::string title;
  std::vector<Check> checks;
  nlohmann::ordered_json data = nlohmann::ordered_json::object();  // extra machine-readable payload

  Check& add(std::string name, bool passed, std::string detail = {}) {
    checks.push_back({std::move(name), passed, std::move(detail)});
    return checks.back();
  }
  bool passed() const {
    for (const Check& c : checks)
      if (!c.passed) return false;
    return true;
  }
  const Check* find(const std::string& name) const {
    for (const Check& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["title"] = title;
    j["passed"] = passed();
    j["checks"] = nlohmann::ordered_json::array();
    for (const Check& c : checks) j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    if (!data.empty()) j["data"] = data;
    return j;
  }

  std::string to_text() const {
    std::string out = "== " + title + "\n";
    for (const Check& c : checks) {
      out += c.passed ? "  [PASS] " : "  [FAIL] ";
      out += c.name;
      if (!c.detail.empty()) out += ": " + c.detail;
      out += "\n";
    }
    return out;
  }
};

}  // namespace latcover
