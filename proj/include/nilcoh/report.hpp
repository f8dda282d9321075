#pragma once

#include <string>
#include <vector>

namespace nilcoh {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string title;
  std::vector<CheckResult> checks;

  void add(std::string name, bool pass, std::string detail = "") {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass)
        return false;
    return true;
  }
};

}  // namespace nilcoh
