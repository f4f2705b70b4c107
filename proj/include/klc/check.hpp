// Accumulated outcome of a batch of exact comparisons.
#pragma once

#include <string>
#include <vector>

namespace klc {

struct CheckResult {
  bool ok = true;
  int checked = 0;
  std::vector<std::string> failures;

  void expect(bool cond, const std::string& what);
  void merge(const CheckResult& other, const std::string& prefix = "");
};

}  // namespace klc
