#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "legdet/verify.hpp"

namespace legdet::cli {

/// Size caps with LEGDET_MAX_P (if set to a positive integer) applied to the
/// full and reduced matrix caps. Throws std::invalid_argument on a bad value.
SizeCaps caps_from_env(const char* value);

/// Runs the command line; returns the process exit code
/// (0 success, 1 usage error, 2 a theorem check failed).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace legdet::cli
