#pragma once

#include <ostream>

namespace thermocap::cli {

// Entry point behind the `thermocap` executable. Exit codes: 0 success,
// 2 configuration or usage error, 3 solver failure, 4 failed law or check.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace thermocap::cli
