#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace quiverkit {

struct CheckOptions {
  std::uint64_t seed = 20080601;
  std::size_t random_matrices = 200;
};

struct CheckResult {
  std::string name;
  int criterion = 0;
  // Hypothesis checks report but never fail a run.
  bool gating = true;
  bool passed = false;
  double elapsed_ms = 0.0;
  std::vector<std::string> failures;
  std::string summary;
};

struct CheckInfo {
  std::string name;
  int criterion;
  bool gating;
  std::string description;
};

const std::vector<CheckInfo>& check_catalog();

// Runs every check, or only the named one. Throws ArgumentError for an
// unknown name.
std::vector<CheckResult> run_checks(const CheckOptions& options, const std::optional<std::string>& only = {});

bool all_gating_passed(const std::vector<CheckResult>& results);

std::string format_result(const CheckResult& result);

}  // namespace quiverkit
