#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qeuler {

// Runs one CLI invocation. `args` excludes the program name.
// Exit codes: 0 success / all pass, 1 some verification failed, 2 usage or
// parameter error (diagnostic on `err`).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qeuler
