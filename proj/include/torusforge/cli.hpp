#pragma once

#include <ostream>

namespace torusforge {

/// Runs one CLI invocation. Exit codes: 0 checks pass, 1 a mathematical check fails, 2 input or usage error.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace torusforge
