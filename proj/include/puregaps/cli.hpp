#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace puregaps::cli {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

/// Entry point of the `puregaps` tool. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace puregaps::cli
