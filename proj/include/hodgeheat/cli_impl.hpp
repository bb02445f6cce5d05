#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hodgeheat {

/// Parse a grid spec: "lin:a:b:n", "log:a:b:n", bare "a:b:n" (linear),
/// a comma list "a,b,c", or a single value.  Throws std::invalid_argument.
std::vector<double> parse_grid(const std::string& spec);

/// Full command dispatch on explicit streams (unit-testable in process).
/// Returns the exit code: 0 success, 1 failed theorem-bound check,
/// 2 malformed input or bad configuration.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace hodgeheat
