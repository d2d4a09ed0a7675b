#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace lll {

// Exit codes: 0 ok, 2 parse/input error, 3 budget exceeded, 4 round or depth
// limit reached, 5 internal invariant failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitLimit = 4;
inline constexpr int kExitInternal = 5;

int run_command(const std::vector<std::string>& args, std::ostream& out = std::cout,
                std::ostream& err = std::cerr);

}  // namespace lll
