#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fourdist {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitComputation = 2;

/// Entry point shared by the fourdist executable and the tests. `args`
/// includes the program name. Results go to `out` unless --out is given.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fourdist
