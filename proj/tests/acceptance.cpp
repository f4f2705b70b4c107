// Runs the acceptance criteria and prints one PASS/FAIL line for each.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "klc/experiments.hpp"

using namespace klc;

namespace {

struct Run {
  std::string kind;  // repro, verify, u1
  std::string name;
  ExperimentOptions opt;
  bool evidence = false;  // must come back evidence-only
};

ExperimentOptions at(int n, std::optional<int> max_n = std::nullopt) {
  ExperimentOptions o;
  o.n = n;
  o.max_n = max_n;
  return o;
}

bool run_one(const Run& r, std::string& why) {
  ExperimentReport rep;
  try {
    rep = r.kind == "repro" ? run_repro(r.name, r.opt) : r.kind == "verify" ? run_verify(r.name, r.opt) : check_u1(r.name, r.opt);
  } catch (const std::exception& e) {
    why += "  " + r.name + ": " + e.what() + "\n";
    return false;
  }
  const Status want = r.evidence ? Status::EvidenceOnly : Status::Match;
  if (rep.status == want) return true;
  why += "  " + r.name + ": " + status_name(rep.status) + "\n";
  for (const auto& [key, c] : rep.details["checks"].items())
    for (const auto& f : c["failures"]) why += "    " + key + ": " + f.get<std::string>() + "\n";
  return false;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::vector<Run>>> criteria{
      {"counit counterexample at n = 6", {{"repro", "counit-example", {}}}},
      {"induced and restricted cell labels", {{"repro", "example-42", {}}, {"repro", "example-43", {}}}},
      {"figure reproduction, finite and affine",
       {{"repro", "figure-vve", {}}, {"repro", "figure-vve-affine", {}}}},
      {"induced e+ graphs and the affine degree one graph", {{"repro", "induced-e-plus", {}}}},
      {"theorem suite",
       {{"verify", "ic-invariants", at(4)},
        {"verify", "cell-iso", at(4)},
        {"verify", "nested", at(4)},
        {"verify", "easycw", at(5, 5)},
        {"verify", "bigdiagram", at(4)}}},
      {"tableau tags against canonical basis tags", {{"verify", "symwedge", at(4)}}},
      {"conjecture evidence",
       {{"verify", "multfree", at(6), true}, {"verify", "dominance", at(4), true}, {"verify", "k-id", at(5, 5), true}}},
      {"oracle equivalences", {{"verify", "oracles", {}}}},
      {"u = 1 specializations",
       {{"u1", "gk-iso", at(4)}, {"u1", "vve-split", at(4)}, {"u1", "affine-poly", at(4)}}},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::string why;
    bool ok = true;
    for (const auto& r : criteria[i].second) ok = run_one(r, why) && ok;
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "criterion " << i + 1 << ": " << (ok ? "PASS" : "FAIL") << "  " << criteria[i].first << "  ("
              << std::fixed << std::setprecision(1) << secs << " s)\n"
              << why << std::flush;
    if (!ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
