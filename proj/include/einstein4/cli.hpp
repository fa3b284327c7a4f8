#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace einstein4 {

/// Command-line entry point, stream-injectable for tests.
/// Exit codes: 0 = success / all checks pass, 1 = a check failed,
/// 2 = usage or IO error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace einstein4
