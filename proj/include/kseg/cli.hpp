#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kseg {

/// Runs the command-line interface on `args` (program name excluded).
/// Documents go to `out`, diagnostics to `err`. Exit code 0 on success,
/// 1 on a computed negative answer (invalid table, not categorical at
/// zero, failed checks), 2 on unreadable input or usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace kseg
