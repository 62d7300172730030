#pragma once

#include <iosfwd>
#include <string_view>
#include <vector>

#include "dckpell/exact_rational.hpp"
#include "dckpell/verifier.hpp"

namespace dckpell::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUnequal = 1;  // identity unequal, inconsistency, or a sweep with failures
inline constexpr int kExitUsage = 2;

enum class OutputFormat { kJson, kCsv, kPlainText };

OutputFormat parse_format(std::string_view text);

/// "a..b" (inclusive) or a single integer "a".
IndexRange parse_range(std::string_view text);
/// Comma-separated rationals, e.g. "1,2,3/2".
std::vector<ExactRational> parse_rational_list(std::string_view text);
/// "all" or comma-separated identity tags.
std::vector<IdentityId> parse_identity_list(std::string_view text);

/// Runs one command line (argv[0] is the program name) and returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dckpell::cli
