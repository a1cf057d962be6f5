#pragma once

#include <iosfwd>

namespace shadowlab::cli {

/// Exit codes: 0 success, 1 a verification check failed, 2 usage or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace shadowlab::cli
