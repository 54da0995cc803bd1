#pragma once

#include <iosfwd>

namespace nsa::cli {

/// Exit codes: 0 success, 1 a false verdict or a failed audit (the report
/// names the witness), 2 invalid input.
inline constexpr int kOk = 0;
inline constexpr int kFalse = 1;
inline constexpr int kInputError = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nsa::cli
