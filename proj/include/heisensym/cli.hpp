#pragma once

#include <iosfwd>

namespace heisensym {

enum ExitCode : int { kExitOk = 0, kExitInput = 2, kExitBudget = 3, kExitVerification = 4 };

/// Whole command-line front end; stdout-style output goes to `out`,
/// diagnostics and progress to `err`. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace heisensym
