#pragma once

#include <string>
#include <vector>

namespace conevex {

// Runs one subcommand; args excludes the program name. Exit codes:
// 0 = success / all checks passed, 1 = a check failed, 2 = usage, parse or
// validation error.
int cli_dispatch(const std::vector<std::string>& args);

}  // namespace conevex
