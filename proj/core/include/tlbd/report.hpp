#pragma once

#include <string>
#include <vector>

namespace tlbd {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;  ///< filled in on failure
};

struct Report {
  std::vector<Check> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void add(std::string name, bool pass, std::string detail = "") {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }
  void merge(const Report& o) {
    checks.insert(checks.end(), o.checks.begin(), o.checks.end());
  }
  long failures() const {
    long n = 0;
    for (const auto& c : checks)
      if (!c.pass) ++n;
    return n;
  }
};

}  // namespace tlbd
