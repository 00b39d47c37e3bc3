#pragma once

// Seeded verification campaigns. Every check reduces to a signed slack where
// negative means violated: inequality checks contribute their relative slack,
// residual checks contribute -residual. A check fails when its slack drops
// below -tolerance.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "modkit_cli/matrix_io.hpp"

namespace modkit::cli {

/// Bad flag values, unknown suites, malformed MODKIT_TOL; maps to exit code 4.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kDefaultResidualTol = 1e-10;

/// One global relative tolerance. Unset means each check keeps its own default
/// (1e-10 for residuals, 1e-11 for inequality slacks).
struct Tolerance {
  std::optional<double> value;

  double residual() const;
  double slack() const;
};

/// flag > MODKIT_TOL > default. Throws UsageError on a non-positive or unparsable value.
Tolerance resolve_tolerance(std::optional<double> flag, const char* env_value);

struct CampaignConfig {
  std::uint64_t seed = 0;
  Eigen::Index dimension = 4;
  int samples = 100;
  Tolerance tolerance;
};

struct SuiteResult {
  std::string suite;
  int samples = 0;
  int failures = 0;
  double worst_slack = 0.0;
};

struct CampaignReport {
  SuiteResult total;
  std::vector<SuiteResult> suites;  // one entry per suite run; several for "all"
  double wall_time = 0.0;
};

/// vec, modular, kms, cone, inequalities, all
const std::vector<std::string>& suite_names();

/// Throws UsageError for an unknown suite or an invalid config.
CampaignReport run_campaign(const CampaignConfig& config, const std::string& suite);

/// {suite, samples, failures, worst_slack, wall_time}, plus "suites" for "all".
Json campaign_to_json(const CampaignReport& report);

}  // namespace modkit::cli
