#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fbwf::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitBadInput = 2,
  kExitNumerical = 3,
};

/// Runs one command line (without the program name). Structured output goes
/// to `out`, diagnostics and warnings to `err`; `in` backs `--input -`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

/// Locale-independent shortest round-trip decimal ("-inf"/"inf"/"nan" for
/// non-finite values).
std::string format_number(double v);

}  // namespace fbwf::cli
