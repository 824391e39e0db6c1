#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace verlinde {

inline constexpr const char* kToolVersion = "0.1.0";

/// Runs one CLI command. Arguments exclude the program name. Writes the
/// result envelope to out and one-line diagnostics to err. Exit codes:
/// 0 success, 1 repro failure, 2 malformed input, 3 unsupported request,
/// 4 resource cap exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace verlinde
