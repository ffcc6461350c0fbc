#pragma once

#include <ostream>

namespace xmon {

/// Exit codes: 0 success, 1 validation errors (topology ERROR findings,
/// infeasible design), 2 usage or input errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace xmon
