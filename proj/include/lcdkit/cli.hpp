// Command-line surface over the library: single-code queries, formula
// evaluation, census runs with caching, and table emission.
#pragma once

#include <iosfwd>

namespace lcdkit::cli {

// Exit status 0 on success, 1 on violated preconditions (one-line diagnostic
// on err), 2 on parse errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lcdkit::cli
