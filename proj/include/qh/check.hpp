#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace qh {

using Json = nlohmann::ordered_json;

// Outcome of one verification routine: named checks plus structured data.
struct CheckReport {
  std::vector<std::pair<std::string, bool>> checks;
  std::vector<std::string> failures;
  Json data = Json::object();

  void add(const std::string &name, bool ok, const std::string &why = {}) {
    checks.emplace_back(name, ok);
    if (!ok)
      failures.push_back(why.empty() ? name : name + ": " + why);
  }
  bool ok() const { return failures.empty(); }
  std::size_t passed() const {
    std::size_t n = 0;
    for (const auto &c : checks)
      n += c.second;
    return n;
  }
  Json to_json() const {
    Json j;
    j["ok"] = ok();
    j["checks"] = checks.size();
    j["passed"] = passed();
    j["failures"] = failures;
    j["data"] = data;
    return j;
  }
};

} // namespace qh
