#pragma once

#include <iosfwd>

namespace taxicab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidSpec = 1;
inline constexpr int kExitVerificationFailed = 2;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace taxicab
