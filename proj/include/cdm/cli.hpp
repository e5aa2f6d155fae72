#pragma once

#include <ostream>

namespace cdm {

/// Runs the command line tool. Returns 0 on success, 1 when an axiom check
/// fails and 2 on usage or parse errors (with a diagnostic on `err`).
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace cdm
