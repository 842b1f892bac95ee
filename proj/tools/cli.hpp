#pragma once

#include <ostream>

namespace osl::cli {

// Exit codes: 0 affirmative (valid / proved / checked ok), 1 negative with a
// witness, 2 usage or parse error, 3 resource cap hit.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace osl::cli
