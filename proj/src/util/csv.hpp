#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace rbvision::csv {

/// Splits one CSV line on commas, trimming surrounding blanks and a
/// trailing carriage return. No quoting support; the toolkit's files never
/// need it.
std::vector<std::string_view> split(std::string_view line);

/// Splits text into lines; a final unterminated line is kept, blank lines
/// are returned as empty views so line numbers stay aligned.
std::vector<std::string_view> lines(std::string_view text);

/// Parses a finite double; throws ParseError naming line and column.
double parse_number(std::string_view cell, std::size_t line, std::size_t column);

/// Shortest decimal form that parses back to the same double.
std::string format_number(double value);

}  // namespace rbvision::csv
