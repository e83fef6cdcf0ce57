#pragma once

#include <string_view>

#include "edgepoly/verify.hpp"
#include "json.hpp"

namespace edgepoly {

/// Exit status contract shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitInputError = 2,
  kExitGuardrail = 3,
};

struct CommandResult {
  nlohmann::json json;
  int exit_code = kExitOk;
};

// Each command takes the raw graph text (JSON or "d n" form). Errors are
// returned as {"error": kind, "message": ...} with the matching exit code,
// never thrown.
CommandResult cmd_classify(std::string_view input);
CommandResult cmd_groebner(std::string_view input);
CommandResult cmd_ehrhart(std::string_view input, long m_max);
CommandResult cmd_verify(std::string_view input, const VerifyOptions& options = {});
CommandResult cmd_fuzz(const FuzzOptions& options);

/// Plain-text rendering of a command's JSON for --format text.
std::string render_text(const nlohmann::json& result);

}  // namespace edgepoly
