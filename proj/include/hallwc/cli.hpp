#pragma once

#include <iosfwd>

namespace hallwc {

/// Exit codes: 0 success, 1 domain error or failed check, 2 invalid input,
/// 3 pole at q = 1.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hallwc
