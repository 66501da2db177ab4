#pragma once

#include <iosfwd>

namespace cyclefact {

/// Entry point of the command-line tool. Returns the process exit code:
/// 0 success, 1 domain failure (mismatch, not arrangeable, not minimal),
/// 2 usage or parse error.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cyclefact
