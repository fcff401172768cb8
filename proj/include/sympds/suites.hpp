#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "sympds/types.hpp"

namespace sympds::suites {

struct RunConfig {
  double mu_re = 0.0;
  double mu_im = 0.0;
  int delta = 0;
  int n = 1;
  int l_max = 5;
  int grid_m = 32;
  double grid_l = 5.0;
  std::int64_t quad_budget = 10'000'000;
  std::uint64_t seed = 0xC0FFEE;
  double tol = 0.0;  // > 0 overrides the per-check defaults of a suite run
  std::string format = "json";
  std::string out_path;

  cplx mu() const { return {mu_re, mu_im}; }
};

void to_json(nlohmann::json& j, const RunConfig& c);
void from_json(const nlohmann::json& j, RunConfig& c);

struct CheckResult {
  std::string check;
  nlohmann::json params;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> results;
  bool pass = true;
  double elapsed_seconds = 0.0;
};

nlohmann::json to_json(const SuiteReport& report);

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// Runs one named suite {specfun, feps, flip, scaling, ksnorm, nonstd, dims}.
SuiteReport run_suite(const std::string& name, const RunConfig& config);

}  // namespace sympds::suites
