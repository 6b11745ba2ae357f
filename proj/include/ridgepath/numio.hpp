#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ridgepath {

// Shortest decimal representation that parses back to the same double.
// Locale-independent ("." decimal point, always).
std::string format_double(double v);

// Fixed-point formatting with `precision` digits after the point,
// locale-independent. Used for plot coordinates and aligned tables.
std::string format_fixed(double v, int precision);

// General (scientific-or-fixed) formatting with `precision` significant
// digits, locale-independent.
std::string format_general(double v, int precision);

// Strict locale-independent parse of a full token. Throws std::runtime_error
// on anything that is not a complete finite or inf/nan literal.
double parse_double(std::string_view s);
bool try_parse_double(std::string_view s, double& out);

// Splits one CSV line on commas. Strips a trailing '\r', surrounding
// whitespace and one layer of double quotes from each field. No support for
// embedded commas inside quotes; the data this tool ingests is numeric.
std::vector<std::string> split_csv_line(std::string_view line);

}  // namespace ridgepath
