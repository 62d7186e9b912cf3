#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cpa::cli {

// Exit codes: 0 all checks pass, 1 some check fails, 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace cpa::cli
