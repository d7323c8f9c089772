#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vebo::cli {

// Runs one command line (without the program name). Returns the process exit
// status; diagnostics go to err.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace vebo::cli
