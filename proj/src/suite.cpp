#include "shilov/suite.hpp"

#include <chrono>

#include "shilov/batch.hpp"

namespace shilov::suite {

namespace {

bool name_selected(const std::string& name,
                   const std::vector<std::string>& filters) {
  if (filters.empty()) return true;
  for (const auto& f : filters)
    if (name.find(f) != std::string::npos) return true;
  return false;
}

}  // namespace

std::vector<std::string> check_names() {
  std::vector<std::string> names;
  for (const auto& spec : registry()) names.push_back(spec.name);
  return names;
}

SuiteReport run_suite(const SuiteConfig& config) {
  SuiteReport report;
  report.seed = config.seed;
  report.overall_pass = true;
  for (const auto& spec : registry()) {
    if (!name_selected(spec.name, config.filters)) continue;
    CheckResult result;
    result.name = spec.name;
    result.samples =
        config.sample_override > 0 ? config.sample_override : spec.samples;
    result.threshold =
        config.tol_override > 0 ? config.tol_override : spec.threshold;

    const std::uint64_t check_seed = mix_seed(config.seed, spec.name);
    const auto start = std::chrono::steady_clock::now();
    const auto [worst, detail] = batch::max_residual(
        result.samples, config.threads, [&](int i) {
          return spec.fn(i, mix_seed(check_seed, std::uint64_t(i)),
                         config.threads);
        });
    const auto stop = std::chrono::steady_clock::now();
    result.elapsed_ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
    result.residual = worst;
    result.detail = detail;
    result.pass = detail.empty() && worst <= result.threshold;
    report.overall_pass = report.overall_pass && result.pass;
    report.checks.push_back(std::move(result));
  }
  return report;
}

Json report_to_json(const SuiteReport& report, bool include_elapsed) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json item{{"name", c.name},
              {"status", c.pass ? "pass" : "fail"},
              {"residual", c.residual},
              {"threshold", c.threshold},
              {"samples", c.samples}};
    if (!c.detail.empty()) item["detail"] = c.detail;
    if (include_elapsed) item["elapsed_ms"] = c.elapsed_ms;
    checks.push_back(std::move(item));
  }
  return Json{{"seed", report.seed},
              {"checks", std::move(checks)},
              {"overall_pass", report.overall_pass}};
}

}  // namespace shilov::suite
