#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rhsinv::cli {

// Entry point behind the rhsinv binary. Returns 0 on success, 1 on input or
// validation errors (diagnostics on err), 2 on internal failures.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rhsinv::cli
