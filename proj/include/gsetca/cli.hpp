#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gsetca::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInvalid = 2;

// Runs one command. `args` excludes the program name. Reports go to `out`,
// diagnostics to `err`; the return value is the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gsetca::cli
