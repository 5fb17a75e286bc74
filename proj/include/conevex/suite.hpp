#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conevex/generator.hpp"

namespace conevex {

struct SuiteConfig {
  GeneratorConfig gen;
  int count = 1;
  int jobs = 1;
};

struct CheckRecord {
  std::string name;
  std::string status;  // "pass" | "fail" | "skip"
  std::string detail;
};

struct InstanceRecord {
  int index = 0;
  std::uint64_t seed = 0;
  std::string status;
  std::vector<CheckRecord> checks;
};

struct SuiteReport {
  std::string family;
  std::uint64_t seed = 0;
  int count = 0;
  int grid = 0;
  std::vector<InstanceRecord> instances;
  int passed = 0, failed = 0, skipped = 0;
  std::optional<std::string> first_counterexample;  // serialized instance

  bool all_passed() const { return failed == 0; }
};

// Generates `count` instances from per-index seeds and runs the checks the
// family supports plus the unconditional invariant checks. Deterministic in
// (seed, config, grid), including under multiple jobs: workers own disjoint
// index sets and records merge in index order.
SuiteReport run_suite(const SuiteConfig& cfg);

std::string suite_report_text(const SuiteReport& rep);
std::string suite_report_json_text(const SuiteReport& rep);

}  // namespace conevex
