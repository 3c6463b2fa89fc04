#pragma once

#include <functional>
#include <string>
#include <vector>

#include "shilov/serialize.hpp"

namespace shilov::suite {

struct SuiteConfig {
  std::uint64_t seed = 42;
  int sample_override = 0;    // 0 keeps each check's own sample count
  double tol_override = 0.0;  // 0 keeps each check's own threshold
  std::vector<std::string> filters;  // substring filters on check names
  int threads = 0;  // 0: OpenMP default, 1: serial reference path
};

struct CheckResult {
  std::string name;
  bool pass = false;
  double residual = 0.0;
  double threshold = 0.0;
  int samples = 0;
  double elapsed_ms = 0.0;
  std::string detail;
};

struct SuiteReport {
  std::uint64_t seed = 42;
  std::vector<CheckResult> checks;
  bool overall_pass = false;
};

// A check draws `samples` residuals (seeded by (seed, name, index)) and
// passes when the max stays at or below the threshold.
struct CheckSpec {
  std::string name;
  int samples;
  double threshold;
  // fn(sample_index, sample_seed, threads) -> residual
  std::function<double(int, std::uint64_t, int)> fn;
};

const std::vector<CheckSpec>& registry();
std::vector<std::string> check_names();

SuiteReport run_suite(const SuiteConfig& config);
Json report_to_json(const SuiteReport& report, bool include_elapsed = true);

}  // namespace shilov::suite
