#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace triadic::cli {

// Dispatches one analysis subcommand (census, estimate, chart, null,
// groups, bench). args excludes the program name. Exit codes: 0 success,
// 1 usage or bad argument, 2 I/O, 3 edge-list parse, 4 analysis undefined
// on this input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace triadic::cli
