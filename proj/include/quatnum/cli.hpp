#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace quatnum::cli {

/// Runs one command-line invocation. args excludes the program name.
/// Returns 0 on success, 1 on domain errors, 2 on usage errors; identical
/// inputs produce byte-identical output. The environment variable
/// QF_SEARCH_LIMIT caps every brute-force search range.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quatnum::cli
