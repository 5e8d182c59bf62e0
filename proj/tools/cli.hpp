#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace boolnet::cli {

/// Run one CLI invocation.  Exit status 0 on success, 1 on usage errors
/// (diagnostic on `err`), 2 on resource-cap violations.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace boolnet::cli
