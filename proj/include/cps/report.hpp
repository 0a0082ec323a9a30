#pragma once

#include <string>
#include <vector>

namespace cps {

/// Collected law violations. Empty means the check passed.
struct Report {
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  void fail(std::string msg) { failures.push_back(std::move(msg)); }
  void merge(const Report& o) {
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
  }
  std::string summary() const {
    std::string s;
    for (const auto& f : failures) {
      s += f;
      s += '\n';
    }
    return s;
  }
};

}  // namespace cps
