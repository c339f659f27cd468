#pragma once

#include <string>

#include "wvn/config.hpp"

namespace wvn {

struct RunResult {
  int exit_code = 0;
  int warnings = 0;
  std::string summary; // human-readable report, printed by the CLI
};

/// Executes the configured pipeline and writes cfg.out (when set). Output is
/// deterministic: fixed 12-significant-digit formatting, rows in grid order.
/// Invalid configuration throws std::domain_error.
RunResult run(const RunConfig& cfg);

} // namespace wvn
