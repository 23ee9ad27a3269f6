#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace arena::text {

std::string_view trim(std::string_view s);
std::string to_upper(std::string_view s);
std::string to_lower(std::string_view s);
bool iequals(std::string_view a, std::string_view b);
std::vector<std::string> split(std::string_view s, char sep);
std::vector<std::string> split_lines(std::string_view s);

/// Shortest decimal text that parses back to exactly `v`.
std::string format_double(double v);
/// Fixed-point with `decimals` digits after the point.
std::string format_fixed(double v, int decimals);
/// Strict full-string parse; throws ParseError.
double parse_double(std::string_view s);

/// Splits one CSV record. Supports double-quoted fields with "" escapes.
std::vector<std::string> parse_csv_row(std::string_view line);
/// Quotes a field only when it contains a separator, quote or newline.
std::string csv_escape(std::string_view field);

/// Reads a whole file; throws Error naming the path when it cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

} // namespace arena::text
