#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace specfun::cli {

struct VerifyOptions {
  std::string suite = "all";
  std::uint64_t seed = 1;
  std::optional<double> tolerance;  // overrides every per-case tolerance
  int jobs = 1;
  bool with_timing = false;
};

struct VerifySummary {
  nlohmann::json report;
  int pass_count = 0;
  int fail_count = 0;
};

/// Suite names accepted by `verify --suite`, without "all".
const std::vector<std::string>& suite_names();

/// Default tolerance of a suite (relative discrepancy bound).
double suite_tolerance(const std::string& suite);

/// Generates and evaluates every case of the suite. Cases are listed in the
/// report sorted by id regardless of `jobs`. Unknown suites raise UsageError.
VerifySummary run_verification(const VerifyOptions& options);

}  // namespace specfun::cli
