#pragma once

#include <string>
#include <vector>

#include "superdirac/json_io.hpp"

namespace superdirac {

struct CheckResult {
  std::string suite;
  std::string identity;  // self-describing id of the verified identity
  bool pass;
  double seconds;
  std::string detail;  // failure data, empty on success
};

struct VerifyLimits {
  std::size_t n_max = 4;  // character-level checks; symbolic ones cap at 2
  long order = 12;
  int jobs = 1;
};

extern const std::vector<std::string> kVerifySuites;

bool is_verify_suite(const std::string& name);

/// Runs the selected suites ("all" or a specific one) within the limits.
/// Independent checks may run on `jobs` worker threads; the report is
/// canonically sorted and schedule-independent.
std::vector<CheckResult> run_verify(const std::string& selection,
                                    const VerifyLimits& limits);

Json verify_report_json(const std::vector<CheckResult>& results,
                        const VerifyLimits& limits);

}  // namespace superdirac
