#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace alphastab::cli {

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailed = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitUnsupported = 3;

// args excludes the program name. "-" as an input path reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace alphastab::cli
