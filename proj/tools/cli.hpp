#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace moncoh::cli {

// Runs one command line (without the program name). Returns 0 on success, 1 when
// a verification fails and 2 on input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace moncoh::cli
