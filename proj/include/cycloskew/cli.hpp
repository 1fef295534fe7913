#pragma once

#include <iosfwd>

namespace cycloskew {

/// Entry point for the command-line tool. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cycloskew
