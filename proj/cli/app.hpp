#pragma once

// Argument parsing and dispatch, kept stream-parametric so tests can drive
// the whole binary in-process.  args excludes the program name.

#include <iosfwd>
#include <string>
#include <vector>

namespace hulthen::cli {

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

} // namespace hulthen::cli
