#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kdes {

enum ExitCode { kExitPass = 0, kExitFailure = 1, kExitUsage = 2 };

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kdes
