// Command-line front end. Kept out of tools/ so the dispatch logic is unit
// testable; the binary is a thin main() around run_cli.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace braidwrench {

// Dispatches one command; returns the process exit code:
//   0  success
//   1  parse error, bad parameters, or property violation
//   2  reduction or oracle budget exceeded
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace braidwrench
