#pragma once

#include <iosfwd>

namespace gsp4 {

// Exit codes: 0 all checks pass, 1 verification failure, 2 invalid input.
int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gsp4
