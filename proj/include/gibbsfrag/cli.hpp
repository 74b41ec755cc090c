#pragma once

#include <iosfwd>

namespace gibbsfrag {

// Runs the command-line surface. Exit codes: 0 success (including an
// infeasible coupling reported with a distinct status), 1 usage or parse
// error, 2 verification failure, 3 resource guard tripped.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gibbsfrag
