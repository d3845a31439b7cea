#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lattice {

/// Exit status: 0 all checks passed, 1 a property failed (the offending grid
/// is written to `out`), 2 usage or input error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Command-line front end; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lattice
