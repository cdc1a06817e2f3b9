#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hullforge/serialize.hpp"

namespace hullforge::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInadmissible = 2,
  kExitInternal = 3,
  kExitVerifyFailed = 4,
  kExitMalformed = 5,
};

/// Exit code for an error escaping construct / table / sweep.
int exit_code_for(ErrorCode code) noexcept;

struct VerifyCheck {
  std::string name;
  /// "pass", "fail" or "skipped".
  std::string status;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  std::size_t hull_stacked = 0;
  std::size_t hull_rank = 0;
  std::optional<EaqeccParams> eaqecc;

  bool ok() const noexcept;
};

/// Recomputes everything a descriptor claims.  Schema and invariant errors
/// propagate as hullforge::Error (the caller maps them to exit 5).
VerifyReport verify_descriptor(const json& descriptor);

json verify_report_to_json(const VerifyReport& r);
std::string verify_report_text(const VerifyReport& r);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hullforge::cli
