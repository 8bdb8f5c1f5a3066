#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace colourlex::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kInternalError = 2;

/// Runs one subcommand. Errors are reported on `err` as a single line
/// "error<TAB><Category><TAB><message>".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace colourlex::cli
