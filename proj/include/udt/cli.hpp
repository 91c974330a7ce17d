#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace udt::cli {

// Runs one command line (argv[0] is the program name). Reports go to `out`,
// diagnostics to `err`. Returns 0 on success, 1 on a domain error (the error
// name is printed) and 2 on a usage error.
int dispatch(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace udt::cli
