#pragma once
// Command-line front end: JSON run configurations and the report commands.
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "linf/skew_ops.hpp"
#include "linf/verify.hpp"

namespace linf::cli {

/// Exit codes shared by every command.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int bottom_degree = 0;
  int max_arity = 10;
  StructureConstants constants{10};

  CaseTag case_tag() const { return case_for_bottom_degree(bottom_degree); }
  GradedSpaceSpec space() const { return GradedSpaceSpec::standard(bottom_degree); }
};

/// Parses a JSON object with keys "case" ("caseA", "caseB", "caseC" or
/// "generic"), "m" (required for "generic"), "a", "b", "c" (arrays of
/// integers or "p/q" strings) and "max_arity" (default 10).
/// `max_arity_override` replaces the file's max_arity. Throws ConfigError.
RunConfig parse_config(std::string_view json_text, std::optional<int> max_arity_override = std::nullopt);
RunConfig load_config(const std::string& path, std::optional<int> max_arity_override = std::nullopt);

struct OutputOptions {
  bool json = false;
};

int cmd_check(const RunConfig& config, const OutputOptions& options, std::ostream& out);
int cmd_solve(const RunConfig& config, const OutputOptions& options, std::ostream& out);
int cmd_dglie(const RunConfig& config, const OutputOptions& options, std::ostream& out);
int cmd_verify_paper(VerifyScale scale, const OutputOptions& options, std::ostream& out);
int cmd_slots(int m, int max_arity, const OutputOptions& options, std::ostream& out);

/// Full command line (args[0] is the program name). Errors go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace linf::cli
