#pragma once

#include <iosfwd>

namespace pn {

/// Entry point of the `pn` command-line tool. Returns the process exit code:
/// 0 success, 2 invalid input, 3 resource budget exceeded, 4 internal
/// invariant violation.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pn
