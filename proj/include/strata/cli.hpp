#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace strata::cli {

/// Runs one command line (without the program name). Returns 0 on
/// success, 1 when a bridge/check verdict is negative, 2 on usage, parse
/// or evaluation errors. `in` is read for the file name "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace strata::cli
