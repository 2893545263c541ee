// cli.hpp
// Command-line front end: every analysis is a subcommand that emits CSV
// (figure data) or a one-line key=value report.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bellnoise::cli {

// Runs the tool on the given arguments (without the program name), writing
// results to `out` and a single-line diagnostic to `err` on failure.
// Returns the process exit status: 0 only when everything succeeded.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace bellnoise::cli
