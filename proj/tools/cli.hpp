#pragma once

#include "parmod/exact.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace parmod::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kVerifyFailed = 2;
inline constexpr int kIrrationalBranch = 3;
inline constexpr int kNotGammaType = 4;

// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Parses an emitted document back into objects and serializes them again.
exact::Json reparse(const exact::Json& doc);

}  // namespace parmod::cli
