#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace capa::cli {

/// Runs one command. `args` excludes the program name. Returns 0 on
/// success, 1 on domain/convergence errors (message on err), 2 on usage
/// errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace capa::cli
