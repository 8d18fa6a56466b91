#pragma once

#include <iosfwd>

namespace multifluid::cli {

/// Exit codes of the command-line tool.
enum Exit : int { kOk = 0, kUsage = 1, kAdmissibility = 2, kDiverged = 3, kVerdict = 4 };

/// Entry point of the `multifluid` tool, callable from tests.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace multifluid::cli
