#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace koszul::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitIndeterminate = 2;

/// Version string of the result document schema.
inline constexpr const char* kSchema = "koszul-result/1";

/// Runs one command line (without the program name). The report goes to
/// `out`, diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace koszul::cli
