#pragma once

// The `bollobas` command-line front end, callable in-process.

#include <iosfwd>
#include <string>
#include <vector>

namespace bollobas::cli {

enum ExitCode : int { kPass = 0, kViolation = 1, kUsage = 2 };

/// Runs one invocation. `args` excludes the program name. `in` backs
/// `--input -`; the report goes to `out` unless `--output` names a file;
/// diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

/// Lowercase hex SHA-256 of `bytes`.
std::string sha256_hex(const std::string& bytes);

} // namespace bollobas::cli
