#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace levysmile::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitNumerical = 2;
inline constexpr int kExitVerifyFailed = 3;

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace levysmile::cli
