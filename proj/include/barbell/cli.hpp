#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace barbell {

// Full command-line front end, stream-parameterized so tests can drive it.
// Exit codes: `check` 0 = admits, 1 = does not admit, 2 = budget exceeded;
// `ssp check` 0 = holds, 1 = fails, 2 = indeterminate; 64 usage/parse errors,
// 65 hypothesis violations.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace barbell
