#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace surfit::cli {

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 when the library reports an error and 2 on a usage error.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace surfit::cli
