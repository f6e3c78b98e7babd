#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace arq {

/// Runs the `arq` command line. Output goes to `out`, diagnostics to `err`.
/// @returns 0 on success, 2 on domain errors (the error name is printed),
///          1 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arq
