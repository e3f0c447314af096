#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coxlen::cli {

inline constexpr int kExitOk = 0;          // command ran and all checks held
inline constexpr int kExitVerifyFail = 1;  // a checked expectation failed
inline constexpr int kExitInput = 2;       // bad flags, group, or word
inline constexpr int kExitBudget = 3;      // a search limit was exhausted

// Runs the coxlen command line (args excludes the program name).  Normal
// output goes to out, warnings and diagnostics to err.  Returns the exit
// code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace coxlen::cli
