#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sbinv::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_invalid_input = 2;
inline constexpr int exit_verification_failed = 3;

/// Run the command line given by `args` (program name excluded), writing
/// the emitted document to `out` (or the --out path) and diagnostics to
/// `err`. Returns one of the exit_* codes above. Identical args produce
/// byte-identical output.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sbinv::cli
