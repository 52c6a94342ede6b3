#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polyvdw::cli {

// Entry point behind the polyvdw executable. `args` excludes the program
// name. Returns 0 on success or witness found, 1 when no witness exists
// within the bounds or a check fails, 2 on input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyvdw::cli
