#include "rwg/csv.hpp"

#include <charconv>
#include <cmath>

namespace rwg::csv {

std::string number(double value, int digits) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                 std::chars_format::general, digits);
  if (ec != std::errc()) return "nan";
  return std::string(buffer, ptr);
}

std::string optional_number(const std::optional<double>& value, int digits) {
  return value ? number(*value, digits) : std::string();
}

void row(std::ostream& os, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) os << ',';
    os << cells[i];
  }
  os << '\n';
}

std::string sanitize(std::string_view label) {
  std::string out(label);
  for (char& c : out) {
    if (c == ',' || c == '\n' || c == '\r' || c == '"') c = '_';
  }
  return out;
}

}  // namespace rwg::csv
