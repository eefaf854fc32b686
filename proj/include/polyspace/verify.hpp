#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace polyspace {

inline constexpr std::string_view kToolkitVersion = "polyspace 0.1.0";

enum class CheckStatus { Pass, Fail, Skipped };

std::string_view to_string(CheckStatus s);
CheckStatus check_status_from_string(std::string_view s);

struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::Fail;
  std::string details;
  std::int64_t ms = 0;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct VerificationReport {
  int n = 0;
  std::vector<CheckResult> checks;

  bool all_passed() const;  // true iff no check failed
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Check ids in report order.
const std::vector<std::string>& check_registry();

struct VerifyOptions {
  int n = 7;
  std::vector<std::string> checks;  // empty: the whole registry
  int max_ring_n = 11;              // matrix-based checks above this n are skipped
  std::optional<std::filesystem::path> cache_dir;
  unsigned jobs = 0;                // 0: hardware concurrency
};

/// Runs the selected checks on a worker pool; results come back in registry
/// order regardless of completion order. Throws Error{InvalidArgument} for an
/// unknown check id or an invalid n.
VerificationReport verify(const VerifyOptions& options);

/// Runs a single check without touching any cache.
CheckResult run_check(const std::string& id, int n, int max_ring_n);

nlohmann::json to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& j);
std::string to_text(const VerificationReport& report);

}  // namespace polyspace
