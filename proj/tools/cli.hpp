#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mobius::cli {

inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kInputError = 2;

/// Runs one command. `args` excludes the program name. Reports go to `out`,
/// diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace mobius::cli
