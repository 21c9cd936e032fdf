#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pvds {

// Entry point behind the pvds binary. args[0] is the program name.
// Exit codes: 0 success, 1 NO answer / invalid witness / failed selftest,
// 2 input or usage error.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace pvds
