#pragma once

#include <iosfwd>

namespace geode {

/// Entry point of the geode tool. Returns the process exit code:
/// 0 success, 1 a verification failed, 2 usage or I/O error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace geode
