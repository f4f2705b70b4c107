#include "klc/check.hpp"

namespace klc {

void CheckResult::expect(bool cond, const std::string& what) {
  ++checked;
  if (!cond) {
    ok = false;
    failures.push_back(what);
  }
}

void CheckResult::merge(const CheckResult& other, const std::string& prefix) {
  checked += other.checked;
  ok = ok && other.ok;
  for (const auto& f : other.failures) failures.push_back(prefix + f);
}

}  // namespace klc
