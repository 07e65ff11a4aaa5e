#pragma once

#include <string>

#include "config.hpp"
#include "table.hpp"

namespace rotorqm::cli {

/// Evaluates the configured subcommand. Module errors propagate as rotorqm::Error.
Table build_table(const RunConfig& config);

/// Complete output document (header + body) in the configured format.
std::string render(const RunConfig& config);

/// Renders and writes to config.out (atomically, via a temporary file and rename) or to
/// stdout when no path is set. Returns the process exit status.
int run(const RunConfig& config);

}  // namespace rotorqm::cli
