#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gsnn {

// Command-line front end, callable in-process for tests. Returns the exit
// code: 0 ok, 1 verification failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gsnn
