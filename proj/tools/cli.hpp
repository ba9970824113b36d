#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hyperframe::cli {

/// Runs one command line (without the program name). Exit codes: 0 on
/// success, 1 on domain errors and failed checks, 2 on usage, I/O or format
/// errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperframe::cli
