#pragma once

#include <iosfwd>

namespace p2leaf {

/// Entry point of the p2leaf command line. Exit codes: 0 success, 2 usage
/// error, 3 runtime failure (including a caterpillar report that fails).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace p2leaf
