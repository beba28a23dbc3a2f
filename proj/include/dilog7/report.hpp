#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dilog7/identities.hpp"

namespace dilog7 {

inline constexpr const char* kToolName = "dilog7";
inline constexpr const char* kToolVersion = "0.1.0";

struct RunConfig {
  int digits = 64;
  std::vector<IdentityId> identities;  // empty + all=true: everything
  bool all = false;
  std::string output_format = "text";  // "text" | "json"
  std::optional<int> required_digits;  // default: digits - 10
  int max_levels = 14;
  int jobs = 1;
};

struct ReportDocument {
  std::string tool;
  std::string version;
  std::string timestamp;  // ISO-8601 UTC
  RunConfig config;
  std::vector<IdentityReport> reports;  // in IdentityId enum order
  bool overall_pass = false;
  bool execution_error = false;
};

/*
 * Runs the selected identity verifications, up to config.jobs at a time;
 * reports always assemble in enum order, so equal configurations produce
 * identical documents regardless of scheduling (timestamp and wall-clock
 * fields aside).
 */
ReportDocument run_verifications(const RunConfig& config);

std::string to_json(const ReportDocument& doc);
std::string to_text(const ReportDocument& doc);

// 0: all selected identities passed; 1: a verification fell short of its
// required digits; 2: an execution error (e.g. quadrature non-convergence).
int exit_code(const ReportDocument& doc);

}  // namespace dilog7
