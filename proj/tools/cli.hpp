#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lenscontact::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line (without the program name). Results go to `out`;
// diagnostics and the synopsis go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// The usage text printed on bad input.
std::string synopsis();

}  // namespace lenscontact::cli
