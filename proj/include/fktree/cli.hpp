#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fktree {

/// Batch front end. Subcommands: construct, solve, normalize, verify,
/// compare, enumerate. Returns 0 on success, 1 on a validation error, 2 when
/// a verify run contains a failing instance.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fktree
