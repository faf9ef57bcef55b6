#pragma once

// Command dispatch for the `antialg` tool.
//
// Reports are line oriented:
//   PASS <check-id>
//   FAIL <check-id> <witness>
//   SKIP <check-id> <count>
//   summary: <n> passed, <n> failed, <n> skipped
// followed by a `---` line and a key=value block. Exit code 0 when no check
// failed, 1 on a failed check or an operation outside its domain, 2 on usage
// and input errors (no checks ran).

#include <iosfwd>
#include <string>
#include <vector>

namespace antialg {

enum ExitCode : int { kExitOk = 0, kExitFail = 1, kExitInput = 2 };

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace antialg
