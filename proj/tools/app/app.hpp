#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "run_config.hpp"

namespace levyslab::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kIo = 3,
  kParity = 4,
};

/// Prints the criterion summary to `out`; 0 iff no criterion failed.
int run_verify(const RunConfig& cfg, std::ostream& out);

/// Whole command: parse, run, write files. Errors become one line on `err`
/// and the matching exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& out_env = {});

}  // namespace levyslab::cli
