#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace trendlab::csv {

/// Quotes a field when it contains a comma, quote or line break.
std::string escape(std::string_view field);

/// Shortest decimal representation that round-trips to the same double.
std::string format_double(double value);

/// Writes one record; fields are escaped.
void write_row(std::ostream& out, const std::vector<std::string>& fields);

/// Splits one CSV record (RFC 4180 quoting, no embedded newlines).
std::vector<std::string> split_row(std::string_view line);

}  // namespace trendlab::csv
