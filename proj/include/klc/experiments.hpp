/*
  Experiment drivers behind `klc repro`, `klc verify` and `klc check-u1`.
  Each run returns a report; artifacts are file name -> contents and never
  depend on timing, so two runs give identical files.
*/
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "klc/check.hpp"

namespace klc {

enum class Status { Match, Mismatch, EvidenceOnly };
std::string status_name(Status s);  // "match", "mismatch", "evidence-only"

struct ExperimentReport {
  std::string name;
  Status status = Status::Match;
  nlohmann::json details = nlohmann::json::object();
  double runtime = 0;  // seconds
  std::map<std::string, std::string> artifacts;

  // folds a check into details["checks"][key]; a failed check makes the report a mismatch
  void absorb(const std::string& key, const CheckResult& c);
  nlohmann::json to_json() const;  // without artifacts
};

struct ExperimentOptions {
  std::optional<int> n;      // experiment default when unset
  std::optional<int> max_n;  // replaces both default caps
  int threads = 1;
  std::uint64_t seed = 1;
};

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// default caps: tableau combinatorics and full induced canonical bases
inline constexpr int kCombinatorialCap = 6;
inline constexpr int kAlgebraicCap = 4;

std::vector<std::string> repro_names();
std::vector<std::string> verify_names();
std::vector<std::string> u1_names();

// throw std::invalid_argument on an unknown name and CapExceeded past the caps
ExperimentReport run_repro(const std::string& name, const ExperimentOptions& opt = {});
ExperimentReport run_verify(const std::string& name, const ExperimentOptions& opt = {});
ExperimentReport check_u1(const std::string& name, const ExperimentOptions& opt = {});

}  // namespace klc
