#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace rwg::csv {

/// Locale-independent decimal rendering with `digits` significant digits.
std::string number(double value, int digits = 15);
/// Empty string when the value is absent.
std::string optional_number(const std::optional<double>& value, int digits = 15);

/// Writes one comma-separated row terminated by '\n'. Cells must not
/// contain commas or newlines.
void row(std::ostream& os, const std::vector<std::string>& cells);

/// Replaces characters that would break an unquoted CSV cell.
std::string sanitize(std::string_view label);

}  // namespace rwg::csv
