#pragma once
// Self-verification suites: property checks of the sign conventions and
// operators, oracle equivalence of the closed forms, and finite-scale checks
// of the classification results. Used by the `verify-paper` command.
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace linf {

enum class VerifyScale {
  kFull,   // the documented bounds
  kQuick,  // reduced bounds for smoke tests
};

struct SuiteInfo {
  std::string id;
  std::string description;
  bool informational = false;  // reported, never fails the run
};

struct SuiteResult {
  std::string id;
  std::string description;
  bool passed = true;
  bool informational = false;
  std::string detail;
  double seconds = 0;
};

inline constexpr std::uint64_t kDefaultVerifySeed = 20240601;

const std::vector<SuiteInfo>& verification_suites();

/// Throws std::invalid_argument for an unknown id.
SuiteResult run_suite(std::string_view id, VerifyScale scale, std::uint64_t seed = kDefaultVerifySeed);

std::vector<SuiteResult> run_verification(VerifyScale scale, std::uint64_t seed = kDefaultVerifySeed);

/// True when every non-informational suite passed.
bool all_passed(const std::vector<SuiteResult>& results);

}  // namespace linf
