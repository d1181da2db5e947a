#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace fracpolya::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kSchemaVersion = 1;

// Runs the command line; args[0] is the program name. Tables and reports go
// to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// "lo:hi:step", endpoint-inclusive within 1e-12. Throws InputError on a
// malformed or empty grid.
std::vector<double> parse_grid(std::string_view text);

// 12 significant digits, locale independent.
std::string format_number(double value);

// RFC 4180 quoting when the field needs it.
std::string csv_field(std::string_view text);

// Copy of a report with every "generated_at" member removed, for comparing
// runs.
Json without_timestamps(Json doc);

}  // namespace fracpolya::cli
