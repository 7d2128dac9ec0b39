#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace svf::cli {

// Exit codes: 0 success, 1 negative mathematical result (not invariant, no
// Hamiltonian, not a family member, ...), 2 usage error, 3 internal error.
// JSON goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace svf::cli
