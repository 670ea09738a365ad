#pragma once

#include <string>
#include <vector>

#include "taukit/algebra_file.hpp"

namespace taukit {

// Outcome of one subcommand on one algebra file. exit_code follows the
// tool-wide convention: 0 success (verdicts like "no tau-map exists" are
// successes), 1 input error, 2 verification failure. text is the
// line-oriented report; json is one stable line with key order fixed by
// construction, so equal inputs give byte-equal output.
struct RunResult {
  int exit_code = 0;
  std::string text;
  std::string json;
};

// Runs one subcommand against the contents of an algebra file. options are
// the raw tokens after the path; both "--flag value" and "--flag=value"
// spellings work. fallback_name fills the report's algebra name when the
// file has no name directive. Never throws: errors land in the result.
RunResult run_command(const std::string& command, const std::vector<std::string>& options,
                      const std::string& file_text, const std::string& fallback_name);

const std::vector<std::string>& command_names();

std::string usage_text();

}  // namespace taukit
