#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace b3 {

// Runs one CLI invocation. args excludes the program name. Returns the exit
// code: 0 success, 1 check failures (scan/compare), 2 usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace b3
