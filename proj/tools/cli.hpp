#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace asrlogic::cli {

/// Runs one command line (without the program name). Exit codes: 0 success,
/// 1 domain error (caps, validation, I/O), 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace asrlogic::cli
