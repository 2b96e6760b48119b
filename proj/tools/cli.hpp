#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace effalg::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInvalidTable = 2;
inline constexpr int kNegative = 3;  // not isomorphic, model rejected
inline constexpr int kUsage = 64;
inline constexpr int kInputError = 66;  // unreadable file or malformed document
inline constexpr int kInternal = 70;

// Runs the tool on args (without the program name). Results go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace effalg::cli
